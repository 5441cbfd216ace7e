//! Operators over multi-valued partial functions.
//!
//! A [`FunctionHandle`] wraps any evaluator `x ↦ f(x)` together with its
//! alphabets and a declared linear output bound, so machines, oracle
//! machines and brute-force definitions combine uniformly.

mod nivat;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use nivat::{advice_membership, nivat_check, nivat_check_capped};

use crate::error::{Error, Result};
use crate::oracle::SharedOracle;
use crate::par::{self, Mode};
use crate::strings::{Alphabet, Word};
use crate::transducer::{Limits, LinearBound, Machine, OutputSet};

type Evaluator = Arc<dyn Fn(&Word) -> Result<OutputSet> + Send + Sync>;

#[derive(Clone)]
pub struct FunctionHandle {
    name: String,
    input: Alphabet,
    output: Alphabet,
    bound: LinearBound,
    evaluator: Evaluator,
}

impl fmt::Debug for FunctionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FunctionHandle({}: {} -> {}, |y| ≤ {})",
            self.name, self.input, self.output, self.bound
        )
    }
}

impl FunctionHandle {
    pub fn new(
        name: &str,
        input: Alphabet,
        output: Alphabet,
        bound: LinearBound,
        evaluator: impl Fn(&Word) -> Result<OutputSet> + Send + Sync + 'static,
    ) -> FunctionHandle {
        FunctionHandle {
            name: name.to_string(),
            input,
            output,
            bound,
            evaluator: Arc::new(evaluator),
        }
    }

    /// The function computed by a machine; emission costs a step, so the
    /// step bound doubles as the output bound.
    pub fn from_machine(machine: Machine) -> FunctionHandle {
        let spec = machine.spec();
        let (name, input, output, bound) = (
            spec.name.clone(),
            spec.input.clone(),
            spec.output.clone(),
            spec.bound,
        );
        FunctionHandle::new(&name, input, output, bound, move |x| machine.enumerate(x))
    }

    pub fn undefined(input: Alphabet, output: Alphabet) -> FunctionHandle {
        let bound = LinearBound::new(0, 1).expect("constant bound");
        FunctionHandle::new("undefined", input, output, bound, |_| Ok(OutputSet::new()))
    }

    pub fn identity(alphabet: Alphabet) -> FunctionHandle {
        FunctionHandle::new(
            "id",
            alphabet.clone(),
            alphabet,
            LinearBound::identity(),
            |x| Ok(OutputSet::from([x.clone()])),
        )
    }

    pub fn named(mut self, name: &str) -> FunctionHandle {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn output_bound(&self) -> LinearBound {
        self.bound
    }

    /// Evaluates `f(x)`, rejecting inputs outside the input alphabet and
    /// outputs that break the declared bound or the output alphabet.
    pub fn eval(&self, x: &Word) -> Result<OutputSet> {
        self.input.check_word(x)?;
        let outputs = (self.evaluator)(x)?;
        let limit = self.bound.eval(x.len());
        for y in &outputs {
            if y.len() as u64 > limit {
                return Err(Error::OutputBound {
                    output: y.display_or_unit(),
                    len: y.len(),
                    bound: self.bound.to_string(),
                    input_len: x.len(),
                });
            }
            self.output.check_word(y)?;
        }
        Ok(outputs)
    }

    pub fn is_defined_at(&self, x: &Word) -> Result<bool> {
        Ok(!self.eval(x)?.is_empty())
    }
}

fn same_alphabets(f: &FunctionHandle, g: &FunctionHandle, op: &str) -> Result<()> {
    if !f.input.same_symbols(&g.input) || !f.output.same_symbols(&g.output) {
        return Err(Error::AlphabetMismatch(format!(
            "{op}: {} is {} -> {} but {} is {} -> {}",
            f.name, f.input, f.output, g.name, g.input, g.output
        )));
    }
    Ok(())
}

/// h(x) = f(x) ∩ g(x).
pub fn intersect(f: &FunctionHandle, g: &FunctionHandle) -> Result<FunctionHandle> {
    same_alphabets(f, g, "intersect")?;
    let (f2, g2) = (f.clone(), g.clone());
    Ok(FunctionHandle::new(
        &format!("({} ∧ {})", f.name, g.name),
        f.input.clone(),
        f.output.clone(),
        f.bound,
        move |x| {
            let a = f2.eval(x)?;
            if a.is_empty() {
                return Ok(a);
            }
            let b = g2.eval(x)?;
            Ok(a.intersection(&b).cloned().collect())
        },
    ))
}

/// Iterated intersection f₁ ∧ … ∧ f_k.
pub fn intersect_all(fs: &[FunctionHandle]) -> Result<FunctionHandle> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::Precondition("intersect_all needs at least one function".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, g| intersect(&acc, g))
}

/// h(x) = f(x) ∪ g(x).
pub fn union(f: &FunctionHandle, g: &FunctionHandle) -> Result<FunctionHandle> {
    same_alphabets(f, g, "union")?;
    let (f2, g2) = (f.clone(), g.clone());
    Ok(FunctionHandle::new(
        &format!("({} ∨ {})", f.name, g.name),
        f.input.clone(),
        f.output.clone(),
        f.bound.max(&g.bound),
        move |x| {
            let mut a = f2.eval(x)?;
            a.extend(g2.eval(x)?);
            Ok(a)
        },
    ))
}

/// h(x) = f(x) − g(x).
pub fn set_difference(f: &FunctionHandle, g: &FunctionHandle) -> Result<FunctionHandle> {
    same_alphabets(f, g, "set_difference")?;
    let (f2, g2) = (f.clone(), g.clone());
    Ok(FunctionHandle::new(
        &format!("({} ⊖ {})", f.name, g.name),
        f.input.clone(),
        f.output.clone(),
        f.bound,
        move |x| {
            let a = f2.eval(x)?;
            if a.is_empty() {
                return Ok(a);
            }
            let b = g2.eval(x)?;
            Ok(a.difference(&b).cloned().collect())
        },
    ))
}

/// co-g: x ↦ Γ^{≤p(|x|)} − g(x) for |x| ≥ n₀, undefined below n₀.
pub fn complement(g: &FunctionHandle, p: LinearBound, n0: usize) -> FunctionHandle {
    complement_capped(g, p, n0, Limits::default().max_enumeration)
}

pub fn complement_capped(
    g: &FunctionHandle,
    p: LinearBound,
    n0: usize,
    cap: usize,
) -> FunctionHandle {
    let g2 = g.clone();
    FunctionHandle::new(
        &format!("co({})", g.name),
        g.input.clone(),
        g.output.clone(),
        p,
        move |x| {
            if x.len() < n0 {
                return Ok(OutputSet::new());
            }
            let limit = p.eval(x.len()) as usize;
            if g2.output.count_up_to(limit) > cap {
                return Err(Error::Resource {
                    what: format!("complement universe Γ^≤{limit} over {}", g2.output),
                    cap,
                });
            }
            let removed = g2.eval(x)?;
            Ok(g2
                .output
                .words_up_to(limit)
                .into_iter()
                .filter(|y| !removed.contains(y))
                .collect())
        },
    )
}

/// (f∘g)(x) = ⋃_{y ∈ g(x)} f(y).
pub fn compose(f: &FunctionHandle, g: &FunctionHandle) -> Result<FunctionHandle> {
    if !g.output.same_symbols(&f.input) {
        return Err(Error::AlphabetMismatch(format!(
            "compose: {} outputs over {} but {} reads {}",
            g.name, g.output, f.name, f.input
        )));
    }
    let (f2, g2) = (f.clone(), g.clone());
    Ok(FunctionHandle::new(
        &format!("({} ∘ {})", f.name, g.name),
        g.input.clone(),
        f.output.clone(),
        f.bound.after(&g.bound),
        move |x| {
            let mut out = OutputSet::new();
            for y in g2.eval(x)? {
                out.extend(f2.eval(&y)?);
            }
            Ok(out)
        },
    ))
}

/// χ_A: total, "1" on members and "0" elsewhere.
pub fn char_fn(a: SharedOracle) -> FunctionHandle {
    let bound = LinearBound::new(0, 1).expect("constant bound");
    let name = format!("χ[{}]", a.describe());
    FunctionHandle::new(
        &name,
        a.alphabet().clone(),
        Alphabet::binary(),
        bound,
        move |x| {
            let bit = if a.contains(x)? { '1' } else { '0' };
            Ok(OutputSet::from([Word::from_chars(&bit.to_string())]))
        },
    )
}

/// η_A: "1" on members, undefined elsewhere.
pub fn quasi_char_fn(a: SharedOracle) -> FunctionHandle {
    let bound = LinearBound::new(0, 1).expect("constant bound");
    let name = format!("η[{}]", a.describe());
    FunctionHandle::new(
        &name,
        a.alphabet().clone(),
        Alphabet::binary(),
        bound,
        move |x| {
            Ok(if a.contains(x)? {
                OutputSet::from([Word::from_chars("1")])
            } else {
                OutputSet::new()
            })
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refinement {
    Holds,
    DomainMismatch { input: Word },
    NotContained { input: Word, extra: Word },
}

impl Refinement {
    pub fn holds(&self) -> bool {
        matches!(self, Refinement::Holds)
    }
}

/// Bounded check that `f` refines `g`: equal domains and f(x) ⊆ g(x) for
/// every |x| ≤ `max_len`. Reports the first violation in length-then-
/// dictionary order.
pub fn refinement_check(
    g: &FunctionHandle,
    f: &FunctionHandle,
    max_len: usize,
    mode: Mode,
) -> Result<Refinement> {
    if !f.input.same_symbols(&g.input) {
        return Err(Error::AlphabetMismatch(format!(
            "refinement_check: {} vs {}",
            f.input, g.input
        )));
    }
    let inputs = g.input.words_up_to(max_len);
    let hit = par::try_find_first(mode, &inputs, |x| {
        let (gx, fx) = (g.eval(x)?, f.eval(x)?);
        if gx.is_empty() != fx.is_empty() {
            return Ok(Some(Refinement::DomainMismatch { input: x.clone() }));
        }
        Ok(fx
            .difference(&gx)
            .next()
            .map(|extra| Refinement::NotContained {
                input: x.clone(),
                extra: extra.clone(),
            }))
    })?;
    Ok(hit.unwrap_or(Refinement::Holds))
}

/// {x : |x| ≤ max_len, f(x) ≠ ∅}.
pub fn domain(f: &FunctionHandle, max_len: usize, mode: Mode) -> Result<BTreeSet<Word>> {
    let inputs = f.input.words_up_to(max_len);
    let defined = par::try_map(mode, &inputs, |x| f.is_defined_at(x))?;
    Ok(inputs
        .into_iter()
        .zip(defined)
        .filter(|(_, d)| *d)
        .map(|(x, _)| x)
        .collect())
}

/// ⋃_{|x| ≤ max_len} f(x).
pub fn range(f: &FunctionHandle, max_len: usize, mode: Mode) -> Result<BTreeSet<Word>> {
    let inputs = f.input.words_up_to(max_len);
    let sets = par::try_map(mode, &inputs, |x| f.eval(x))?;
    Ok(sets.into_iter().flatten().collect())
}

/// The first input (length-then-dictionary order) with |x| ≤ max_len where
/// `f` and `g` differ, with both values.
pub fn first_difference(
    f: &FunctionHandle,
    g: &FunctionHandle,
    max_len: usize,
    mode: Mode,
) -> Result<Option<(Word, OutputSet, OutputSet)>> {
    first_difference_on(f, g, &f.input.words_up_to(max_len), mode)
}

pub fn first_difference_on(
    f: &FunctionHandle,
    g: &FunctionHandle,
    inputs: &[Word],
    mode: Mode,
) -> Result<Option<(Word, OutputSet, OutputSet)>> {
    par::try_find_first(mode, inputs, |x| {
        let (a, b) = (f.eval(x)?, g.eval(x)?);
        Ok((a != b).then(|| (x.clone(), a, b)))
    })
}

#[cfg(test)]
mod tests;
