//! Many-one and Turing relativized execution.
//!
//! An [`Oracle`] is a pure membership predicate. A many-one machine writes
//! one query word per path and its output survives iff the word is in the
//! oracle; a Turing machine may enter `q_query` any number of times, each
//! time receiving an answer in `q_yes`/`q_no` with a blanked query tape.

pub mod random;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::FunctionHandle;
use crate::error::{Error, Result};
use crate::strings::{Alphabet, Symbol, Word};
use crate::transducer::{Limits, Machine, MachineSpec, OutputSet, QueryRecord};

pub trait Oracle: Send + Sync {
    fn alphabet(&self) -> &Alphabet;

    fn contains(&self, word: &[Symbol]) -> Result<bool>;

    fn describe(&self) -> String {
        "oracle".to_string()
    }
}

pub type SharedOracle = Arc<dyn Oracle>;

type Predicate = Arc<dyn Fn(&[Symbol]) -> bool + Send + Sync>;

/// An oracle backed by a closure.
#[derive(Clone)]
pub struct PredicateOracle {
    name: String,
    alphabet: Alphabet,
    pred: Predicate,
}

impl PredicateOracle {
    pub fn new(
        name: &str,
        alphabet: Alphabet,
        pred: impl Fn(&[Symbol]) -> bool + Send + Sync + 'static,
    ) -> PredicateOracle {
        PredicateOracle {
            name: name.to_string(),
            alphabet,
            pred: Arc::new(pred),
        }
    }

    /// Σ*.
    pub fn all(alphabet: Alphabet) -> PredicateOracle {
        PredicateOracle::new("all", alphabet, |_| true)
    }

    /// ∅.
    pub fn none(alphabet: Alphabet) -> PredicateOracle {
        PredicateOracle::new("none", alphabet, |_| false)
    }

    pub fn palindromes(alphabet: Alphabet) -> PredicateOracle {
        PredicateOracle::new("palindromes", alphabet, |w| w.iter().eq(w.iter().rev()))
    }

    /// {ww}.
    pub fn squares(alphabet: Alphabet) -> PredicateOracle {
        PredicateOracle::new("dup", alphabet, |w| {
            w.len() % 2 == 0 && w[..w.len() / 2] == w[w.len() / 2..]
        })
    }

    /// A fixed pseudo-random language: membership is a seeded hash bit.
    pub fn hashed(alphabet: Alphabet, seed: u64) -> PredicateOracle {
        use std::hash::{Hash, Hasher};
        PredicateOracle::new(&format!("hashed({seed})"), alphabet, move |w| {
            let mut h = std::collections::hash_map::DefaultHasher::new();
            seed.hash(&mut h);
            for s in w {
                s.as_str().hash(&mut h);
            }
            h.finish() & 1 == 1
        })
    }

    /// `builtin:<name>` lookup used by the CLI.
    pub fn builtin(name: &str, alphabet: Alphabet) -> Option<PredicateOracle> {
        Some(match name {
            "palindromes" => PredicateOracle::palindromes(alphabet),
            "dup" => PredicateOracle::squares(alphabet),
            "all" => PredicateOracle::all(alphabet),
            "none" => PredicateOracle::none(alphabet),
            _ => return None,
        })
    }
}

impl Oracle for PredicateOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, word: &[Symbol]) -> Result<bool> {
        self.alphabet.check_word(word)?;
        Ok((self.pred)(word))
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// The language recognized by a machine. A query machine needs an inner
/// oracle of its own; answers are memoized.
pub struct MachineOracle {
    machine: Machine,
    inner: Option<SharedOracle>,
    memo: Mutex<HashMap<Word, bool>>,
}

impl MachineOracle {
    /// L(machine) for a machine without a query tape.
    pub fn plain(machine: Machine) -> MachineOracle {
        MachineOracle {
            machine,
            inner: None,
            memo: Mutex::default(),
        }
    }

    pub fn with_inner(machine: Machine, inner: SharedOracle) -> MachineOracle {
        MachineOracle {
            machine,
            inner: Some(inner),
            memo: Mutex::default(),
        }
    }

    fn decide(&self, word: &Word) -> Result<bool> {
        let spec = self.machine.spec();
        match (&self.inner, spec.query.as_ref()) {
            (_, None) => self.machine.accepts(word),
            (Some(inner), Some(q)) if q.turing.is_some() => {
                Ok(!self.machine.run_turing(word, inner.as_ref())?.0.is_empty())
            }
            (Some(inner), Some(_)) => {
                Ok(!eval_many_one(&self.machine, inner.as_ref(), word)?.is_empty())
            }
            (None, Some(_)) => Err(Error::Precondition(format!(
                "query machine `{}` used as an oracle without an oracle of its own",
                spec.name
            ))),
        }
    }
}

impl Oracle for MachineOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.machine.spec().input
    }

    fn contains(&self, word: &[Symbol]) -> Result<bool> {
        let word = Word::from(word);
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&word) {
            return Ok(*hit);
        }
        let answer = self.decide(&word)?;
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(word, answer);
        Ok(answer)
    }

    fn describe(&self) -> String {
        format!("L({})", self.machine.name())
    }
}

/// Pointwise negation.
pub struct ComplementOracle(pub SharedOracle);

impl Oracle for ComplementOracle {
    fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    fn contains(&self, word: &[Symbol]) -> Result<bool> {
        self.0.contains(word).map(|b| !b)
    }

    fn describe(&self) -> String {
        format!("co-{}", self.0.describe())
    }
}

/// Oracle answering with `accepts(spec, ·)`.
pub fn language_from_machine(spec: MachineSpec) -> Result<MachineOracle> {
    Ok(MachineOracle::plain(Machine::new(spec)?))
}

pub fn complement_oracle(oracle: SharedOracle) -> SharedOracle {
    Arc::new(ComplementOracle(oracle))
}

fn require_mode(machine: &Machine, turing: bool) -> Result<()> {
    let spec = machine.spec();
    match (&spec.query, turing) {
        (Some(q), false) if q.turing.is_none() => Ok(()),
        (Some(q), true) if q.turing.is_some() => Ok(()),
        _ => Err(Error::Precondition(format!(
            "machine `{}` is not a {} oracle machine",
            spec.name,
            if turing { "Turing" } else { "many-one" }
        ))),
    }
}

/// Outputs of accepting paths whose query word is in the oracle.
pub fn eval_many_one(machine: &Machine, oracle: &dyn Oracle, x: &Word) -> Result<OutputSet> {
    require_mode(machine, false)?;
    let mut answers: HashMap<Word, bool> = HashMap::new();
    let mut out = OutputSet::new();
    for (output, query) in machine.run_collect(x)? {
        let yes = match answers.get(&query) {
            Some(a) => *a,
            None => {
                let a = oracle
                    .contains(&query)
                    .map_err(|e| Error::Oracle(Box::new(e)))?;
                answers.insert(query, a);
                a
            }
        };
        if yes {
            out.insert(output);
        }
    }
    Ok(out)
}

/// Output set of a Turing run together with every simulated query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuringRun {
    pub outputs: OutputSet,
    pub queries: Vec<QueryRecord>,
}

pub fn eval_turing(machine: &Machine, oracle: &dyn Oracle, x: &Word) -> Result<OutputSet> {
    Ok(eval_turing_traced(machine, oracle, x)?.outputs)
}

pub fn eval_turing_traced(machine: &Machine, oracle: &dyn Oracle, x: &Word) -> Result<TuringRun> {
    require_mode(machine, true)?;
    let (outputs, queries) = machine.run_turing(x, oracle)?;
    Ok(TuringRun { outputs, queries })
}

/// Deepest nesting accepted by [`build_level`].
pub const MAX_LEVEL: usize = 4;

/// The level-`k` function computed by `base` relative to the chain: the
/// oracle of `base` is the complement of the language of `chain[0]`, whose
/// own oracle is the complement of the language of `chain[1]`, and so on.
/// All chain machines except the last are Turing query machines.
pub fn build_level(k: usize, base: MachineSpec, chain: Vec<MachineSpec>) -> Result<FunctionHandle> {
    build_level_with(k, base, chain, Limits::default())
}

/// [`build_level`] with explicit engine limits for every machine involved.
pub fn build_level_with(
    k: usize,
    base: MachineSpec,
    chain: Vec<MachineSpec>,
    limits: Limits,
) -> Result<FunctionHandle> {
    if k == 0 || k > MAX_LEVEL {
        return Err(Error::Precondition(format!(
            "level {k} outside 1..={MAX_LEVEL}"
        )));
    }
    if chain.len() != k - 1 {
        return Err(Error::Precondition(format!(
            "level {k} needs a chain of {} machines, got {}",
            k - 1,
            chain.len()
        )));
    }
    let base = Machine::new(base)?.with_limits(limits);
    if k == 1 {
        return Ok(FunctionHandle::from_machine(base));
    }
    let mut oracle: Option<SharedOracle> = None;
    for spec in chain.into_iter().rev() {
        let machine = Machine::new(spec)?.with_limits(limits);
        let language: SharedOracle = match oracle.take() {
            None => Arc::new(MachineOracle::plain(machine)),
            Some(inner) => Arc::new(MachineOracle::with_inner(machine, inner)),
        };
        oracle = Some(complement_oracle(language));
    }
    let oracle = oracle.expect("non-empty chain");
    let spec = base.spec();
    let name = format!("level{k}({})", spec.name);
    let (input, output, bound) = (spec.input.clone(), spec.output.clone(), spec.bound);
    Ok(FunctionHandle::new(&name, input, output, bound, move |x| {
        eval_turing(&base, oracle.as_ref(), x)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_oracles() {
        let bin = Alphabet::binary();
        let w = Word::from_chars;
        let pal = PredicateOracle::palindromes(bin.clone());
        assert!(pal.contains(&w("010")).unwrap());
        assert!(!pal.contains(&w("01")).unwrap());
        assert!(pal.contains(&w("2")).is_err());
        let co: SharedOracle = complement_oracle(Arc::new(pal.clone()));
        assert!(co.contains(&w("01")).unwrap());
        let coco = complement_oracle(co);
        for x in bin.words_up_to(5) {
            assert_eq!(coco.contains(&x).unwrap(), pal.contains(&x).unwrap());
        }
        let all: SharedOracle = Arc::new(PredicateOracle::all(bin.clone()));
        assert!(!complement_oracle(all).contains(&w("0")).unwrap());
        let h = PredicateOracle::hashed(bin.clone(), 7);
        assert_eq!(
            h.contains(&w("0110")).unwrap(),
            h.contains(&w("0110")).unwrap()
        );
        assert!(PredicateOracle::squares(bin).contains(&w("0101")).unwrap());
    }

    #[test]
    fn level_bounds() {
        let spec = crate::witnesses::machines::pal_sub();
        assert!(build_level(0, spec.clone(), vec![]).is_err());
        assert!(build_level(5, spec.clone(), vec![spec.clone(); 4]).is_err());
        assert!(build_level(2, spec.clone(), vec![]).is_err());
        let f = build_level(1, spec, vec![]).unwrap();
        assert_eq!(f.eval(&Word::from_chars("0110")).unwrap().len(), 5);
    }
}
