//! Seeded random Turing-mode oracle machines for stress checks.
//!
//! λ-moves (including the implicit query move) always climb to a state of
//! higher rank, so every path performs at most one λ-run per input cell
//! and the declared bound `(S+1)·(n+3)` always holds.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::strings::{Alphabet, Word};
use crate::transducer::{LinearBound, MachineSpec};

use super::PredicateOracle;

const READS: [&str; 5] = ["¢", "0", "1", "$", "λ"];

/// A random Turing query machine over binary input, output and query
/// alphabets with stack alphabet `{Z, A}`.
pub fn random_turing_machine(seed: u64) -> MachineSpec {
    let mut rng = StdRng::seed_from_u64(seed);
    let work = rng.gen_range(2..=4);
    // Rank order: s0 < … < s{work-1} < qq < qy < qn < acc < rej.
    let mut ranked: Vec<String> = (0..work).map(|i| format!("s{i}")).collect();
    ranked.extend(["qq", "qy", "qn", "acc", "rej"].map(String::from));
    let total = ranked.len() as u64;

    let bin = Alphabet::binary();
    let mut spec = MachineSpec::new(
        &format!("random{seed}"),
        bin.clone(),
        Alphabet::from_chars("ZA").expect("stack alphabet"),
        bin.clone(),
        "s0",
        "Z",
        LinearBound::new(total + 1, 3 * (total + 1)).expect("positive bound"),
    )
    .accepting(&["acc"])
    .rejecting(&["rej"])
    .turing(bin, "qq", "qy", "qn");

    let sources: Vec<usize> = (0..ranked.len())
        .filter(|&i| !["qq", "acc", "rej"].contains(&ranked[i].as_str()))
        .collect();
    for &from in &sources {
        for read in READS {
            for top in ["Z", "A"] {
                if !rng.gen_bool(0.55) {
                    continue;
                }
                for _ in 0..rng.gen_range(1..=2) {
                    let to = if read == "λ" {
                        rng.gen_range(from + 1..ranked.len())
                    } else {
                        rng.gen_range(0..ranked.len())
                    };
                    let push = match (rng.gen_range(0..3), top) {
                        (1, _) => format!("A{top}"),
                        (2, "A") => "λ".to_string(),
                        _ => top.to_string(),
                    };
                    let emit = *["λ", "0", "1"].choose(&mut rng).expect("choice");
                    let query = *["λ", "λ", "0", "1"].choose(&mut rng).expect("choice");
                    spec = spec.trans_q(&ranked[from], read, top, &ranked[to], &push, emit, query);
                }
            }
        }
    }
    spec
}

/// A random oracle over `{0,1}`: Σ*, ∅, palindromes, squares or a seeded
/// hash language.
pub fn random_oracle(seed: u64) -> PredicateOracle {
    let bin = Alphabet::binary();
    match seed % 5 {
        0 => PredicateOracle::all(bin),
        1 => PredicateOracle::none(bin),
        2 => PredicateOracle::palindromes(bin),
        3 => PredicateOracle::squares(bin),
        _ => PredicateOracle::hashed(bin, seed),
    }
}

/// A random binary input of length at most `max_len`.
pub fn random_input(seed: u64, max_len: usize) -> Word {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { '1' } else { '0' }.into())
        .collect()
}
