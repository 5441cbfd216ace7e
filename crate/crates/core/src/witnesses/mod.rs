//! Every concrete function and language of the theory, each as a
//! construction paired with a direct brute-force definition.

pub mod brute;
pub mod machines;

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use crate::algebra::{
    advice_membership, compose, first_difference_on, quasi_char_fn, FunctionHandle,
};
use crate::error::Result;
use crate::optimize::{opt_refinement, OptMode};
use crate::oracle::{build_level, language_from_machine, PredicateOracle, SharedOracle};
use crate::par::Mode;
use crate::strings::{Alphabet, Symbol, Word};
use crate::transducer::{LinearBound, Machine, MachineSpec, OutputSet};

/// How the construction side of an entry is built.
#[derive(Clone, Debug)]
pub enum Construction {
    Machine(MachineSpec),
    /// `outer ∘ inner`.
    Composition {
        outer: MachineSpec,
        inner: MachineSpec,
    },
    /// A Turing base machine over a chain of complemented languages.
    Level {
        base: MachineSpec,
        chain: Vec<MachineSpec>,
    },
    /// x ∈ L iff some y ∈ h(x) has ⟨x,y⟩ ∈ L(b).
    Advice {
        h: MachineSpec,
        b: MachineSpec,
    },
    /// Derived from other handles by an operator.
    Operator(String),
}

#[derive(Clone, Debug)]
pub struct WitnessEntry {
    pub name: &'static str,
    pub definition: &'static str,
    pub construction: Construction,
    pub construct: FunctionHandle,
    pub oracle: FunctionHandle,
    /// Inputs are all words over this alphabet up to the test length.
    pub inputs: Alphabet,
    pub max_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree {
        checked: usize,
    },
    Mismatch {
        input: Word,
        construction: OutputSet,
        oracle: OutputSet,
    },
}

impl Verdict {
    pub fn agrees(&self) -> bool {
        matches!(self, Verdict::Agree { .. })
    }
}

/// Exact set equality on every input of length at most `max_len`.
pub fn verify_entry(entry: &WitnessEntry, max_len: usize, mode: Mode) -> Result<Verdict> {
    let inputs = entry.inputs.words_up_to(max_len);
    Ok(
        match first_difference_on(&entry.construct, &entry.oracle, &inputs, mode)? {
            None => Verdict::Agree {
                checked: inputs.len(),
            },
            Some((input, construction, oracle)) => Verdict::Mismatch {
                input,
                construction,
                oracle,
            },
        },
    )
}

fn alpha(chars: &str) -> Alphabet {
    Alphabet::from_chars(chars).expect("witness alphabet")
}

fn bound(a: u64, b: u64) -> LinearBound {
    LinearBound::new(a, b).expect("positive bound")
}

fn handle(spec: &MachineSpec) -> FunctionHandle {
    FunctionHandle::from_machine(
        Machine::new(spec.clone()).expect("witness machines are well formed"),
    )
}

fn brute_fn(
    name: &str,
    input: &Alphabet,
    output: &Alphabet,
    p: LinearBound,
    f: impl Fn(&[Symbol]) -> OutputSet + Send + Sync + 'static,
) -> FunctionHandle {
    FunctionHandle::new(name, input.clone(), output.clone(), p, move |x| Ok(f(x)))
}

fn eta(
    name: &str,
    input: &Alphabet,
    member: impl Fn(&[Symbol]) -> bool + Send + Sync + 'static,
) -> FunctionHandle {
    let oracle: SharedOracle = Arc::new(PredicateOracle::new(name, input.clone(), member));
    quasi_char_fn(oracle).named(name)
}

fn machine_entry(
    name: &'static str,
    definition: &'static str,
    spec: MachineSpec,
    oracle: FunctionHandle,
    max_len: usize,
) -> WitnessEntry {
    WitnessEntry {
        name,
        definition,
        construct: handle(&spec),
        inputs: spec.input.clone(),
        construction: Construction::Machine(spec),
        oracle,
        max_len,
    }
}

/// f_dup♮ as the composition of the two witness machines.
pub fn f_dup_composition() -> FunctionHandle {
    compose(
        &handle(&machines::reverse_tail()),
        &handle(&machines::dup_reverse()),
    )
    .expect("alphabets line up")
    .named("f_dup")
}

/// DUP_# decided through the advice operator.
pub fn dup_hash_by_advice() -> FunctionHandle {
    let h = handle(&machines::dup_hash_advice());
    let b: SharedOracle =
        Arc::new(language_from_machine(machines::dup_hash_track_checker()).expect("well formed"));
    let name = "DUP_# via advice";
    FunctionHandle::new(
        name,
        alpha("01#"),
        Alphabet::binary(),
        bound(0, 1),
        move |x| {
            Ok(if advice_membership(b.as_ref(), &h, x)? {
                OutputSet::from([Word::from_chars("1")])
            } else {
                OutputSet::new()
            })
        },
    )
}

/// η for DUP_♮ decided through the range of the composition: x ∈ DUP_♮
/// iff x ≠ λ and x = f_dup(z) for the binary z of length (|x|-1)/2.
pub fn dup_natural_by_range() -> FunctionHandle {
    let f = f_dup_composition();
    let bin = Alphabet::binary();
    let ranges: Mutex<HashMap<usize, Arc<BTreeSet<Word>>>> = Mutex::default();
    FunctionHandle::new(
        "DUP_♮ via range",
        alpha("01♮"),
        bin.clone(),
        bound(0, 1),
        move |x| {
            if x.len() % 2 == 0 {
                return Ok(OutputSet::new());
            }
            let k = (x.len() - 1) / 2;
            let cached = ranges
                .lock()
                .expect("range cache poisoned")
                .get(&k)
                .cloned();
            let range = match cached {
                Some(r) => r,
                None => {
                    let mut r = BTreeSet::new();
                    for z in bin.words_of_len(k) {
                        r.extend(f.eval(&z)?);
                    }
                    let r = Arc::new(r);
                    ranges
                        .lock()
                        .expect("range cache poisoned")
                        .insert(k, r.clone());
                    r
                }
            };
            Ok(if range.contains(x) {
                OutputSet::from([Word::from_chars("1")])
            } else {
                OutputSet::new()
            })
        },
    )
}

/// The square-substring function at level 2.
pub fn square_substring_level() -> FunctionHandle {
    build_level(
        2,
        machines::square_substring_base(),
        vec![machines::square_substring_chain()],
    )
    .expect("well formed")
    .named("square_substring")
}

/// The separator-pair function g and its dictionary maximum.
pub fn prop8_max() -> FunctionHandle {
    opt_refinement(&handle(&machines::prop8_g()), OptMode::Max).named("max g")
}

pub fn catalog() -> Vec<WitnessEntry> {
    let bin = Alphabet::binary();
    let hash = alpha("01#");
    let nat = alpha("01♮");
    let g_in = alpha("01♮#");
    vec![
        machine_entry(
            "pal_sub",
            "PAL_sub(w) = { x : w = uxv, x = xᴿ }",
            machines::pal_sub(),
            brute_fn("pal_sub", &bin, &bin, bound(1, 0), brute::pal_sub),
            8,
        ),
        machine_entry(
            "eta_pal",
            "η_A with A the binary palindromes",
            machines::eta_palindromes(),
            eta("palindromes", &bin, brute::is_palindrome_word),
            8,
        ),
        machine_entry(
            "chi_pal",
            "χ_A with A the binary palindromes",
            machines::chi_palindromes(),
            brute_fn("chi_pal", &bin, &bin, bound(0, 1), |x| {
                let bit = if brute::is_palindrome_word(x) {
                    "1"
                } else {
                    "0"
                };
                OutputSet::from([Word::from_chars(bit)])
            }),
            8,
        ),
        WitnessEntry {
            name: "dup_hash",
            definition: "DUP_# = { x#x : x ∈ {0,1}* } via h(x#y) = y and track equality",
            construction: Construction::Advice {
                h: machines::dup_hash_advice(),
                b: machines::dup_hash_track_checker(),
            },
            construct: dup_hash_by_advice(),
            oracle: eta("dup_hash", &hash, brute::is_dup_hash),
            inputs: hash.clone(),
            max_len: 8,
        },
        machine_entry(
            "l_pal",
            "L_pal = { x#xᴿ : x ∈ {0,1}* }",
            machines::l_pal(),
            eta("l_pal", &hash, brute::is_l_pal),
            8,
        ),
        WitnessEntry {
            name: "f_dup",
            definition: "f_dup♮(x) = { x♮x } as (u♮v ↦ u♮vᴿ) ∘ (x ↦ x♮xᴿ)",
            construction: Construction::Composition {
                outer: machines::reverse_tail(),
                inner: machines::dup_reverse(),
            },
            construct: f_dup_composition(),
            oracle: brute_fn("f_dup", &nat, &nat, bound(2, 1), brute::f_dup),
            inputs: bin.clone(),
            max_len: 8,
        },
        WitnessEntry {
            name: "dup_natural",
            definition: "DUP_♮ = { x♮x : x ∈ {0,1}* } as the nonempty range of f_dup♮",
            construction: Construction::Operator("η over ran(f_dup) − {λ}".into()),
            construct: dup_natural_by_range(),
            oracle: eta("dup_natural", &nat, brute::is_dup_natural),
            inputs: nat.clone(),
            max_len: 8,
        },
        WitnessEntry {
            name: "square_substring",
            definition: "f(w) = { x : w = uxxv }",
            construction: Construction::Level {
                base: machines::square_substring_base(),
                chain: vec![machines::square_substring_chain()],
            },
            construct: square_substring_level(),
            oracle: brute_fn(
                "square_substring",
                &bin,
                &bin,
                bound(1, 0),
                brute::square_substring,
            ),
            inputs: bin.clone(),
            max_len: 8,
        },
        machine_entry(
            "prop8_g",
            "g(w) = {λ} ∪ { x_i y_i : w = x₁♮x₂♮x₃#y₁♮y₂♮y₃, x_i = y_iᴿ }",
            machines::prop8_g(),
            brute_fn("prop8_g", &g_in, &bin, bound(1, 0), brute::prop8_g),
            8,
        ),
        WitnessEntry {
            name: "prop8_max",
            definition: "f(w) = max g(w) in dictionary order",
            construction: Construction::Operator("max ∘ g".into()),
            construct: prop8_max(),
            oracle: brute_fn("prop8_max", &g_in, &bin, bound(1, 0), |w| {
                let g = brute::prop8_g(w);
                let best = g.into_iter().max_by(dict_binary).expect("λ ∈ g(w)");
                OutputSet::from([best])
            }),
            inputs: g_in,
            max_len: 8,
        },
    ]
}

/// Dictionary order over {0,1}, written out directly.
fn dict_binary(a: &Word, b: &Word) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return if x.is("0") {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            };
        }
    }
    a.len().cmp(&b.len())
}

pub fn find(name: &str) -> Option<WitnessEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
