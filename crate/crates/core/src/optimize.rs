//! Dictionary-extremal outputs: x ↦ max or min of the valid outputs.

use std::fmt;
use std::str::FromStr;

use crate::algebra::FunctionHandle;
use crate::error::{Error, Result};
use crate::strings::{Alphabet, Word};
use crate::transducer::{Machine, OutputSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OptMode {
    Max,
    Min,
}

impl FromStr for OptMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<OptMode> {
        match s {
            "max" | "maximum" => Ok(OptMode::Max),
            "min" | "minimum" => Ok(OptMode::Min),
            _ => Err(Error::Precondition(format!(
                "unknown optimization mode `{s}`"
            ))),
        }
    }
}

impl fmt::Display for OptMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OptMode::Max => "max",
            OptMode::Min => "min",
        })
    }
}

/// The extremal element of `set` in dictionary order over `alphabet`.
pub fn extremal(set: &OutputSet, mode: OptMode, alphabet: &Alphabet) -> Result<Option<Word>> {
    for y in set {
        alphabet.check_word(y)?;
    }
    let cmp = |a: &&Word, b: &&Word| alphabet.compare_unchecked(a, b);
    Ok(match mode {
        OptMode::Max => set.iter().max_by(cmp),
        OptMode::Min => set.iter().min_by(cmp),
    }
    .cloned())
}

/// The extremal valid output of `machine` on `x`. An input without an
/// accepting path is a precondition violation.
pub fn opt_eval(machine: &Machine, mode: OptMode, x: &Word) -> Result<Word> {
    let outputs = machine.enumerate(x)?;
    extremal(&outputs, mode, &machine.spec().output)?.ok_or_else(|| {
        Error::Precondition(format!(
            "`{}` has no accepting path on `{}`",
            machine.name(),
            x.display_or_unit()
        ))
    })
}

/// [`opt_eval`] restricted to stack-free machines whose accepting outputs
/// on `x` all have the same length.
pub fn opt_nfa_el_eval(machine: &Machine, mode: OptMode, x: &Word) -> Result<Word> {
    if !machine.is_stack_free() {
        return Err(Error::StackUse(machine.name().to_string()));
    }
    let outputs = machine.enumerate(x)?;
    let mut lengths = outputs.iter().map(|y| y.len());
    if let Some(first) = lengths.next() {
        if let Some(second) = lengths.find(|&l| l != first) {
            return Err(Error::UnequalLengths {
                input: x.display_or_unit(),
                first,
                second,
            });
        }
    }
    opt_eval(machine, mode, x)
}

/// x ↦ {extremal element of f(x)}; undefined inputs raise a totality error.
pub fn opt_refinement(f: &FunctionHandle, mode: OptMode) -> FunctionHandle {
    let inner = f.clone();
    let name = format!("{mode}({})", f.name());
    FunctionHandle::new(
        &name,
        f.input_alphabet().clone(),
        f.output_alphabet().clone(),
        f.output_bound(),
        move |x| {
            let set = inner.eval(x)?;
            match extremal(&set, mode, inner.output_alphabet())? {
                Some(y) => Ok(OutputSet::from([y])),
                None => Err(Error::Undefined(x.display_or_unit())),
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::refinement_check;
    use crate::par::Mode;
    use crate::strings::dict_compare;
    use crate::transducer::{LinearBound, MachineSpec};
    use crate::witnesses::machines;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    fn two_outputs(outs: [&str; 2]) -> Machine {
        let bin = Alphabet::binary();
        let z = Alphabet::from_chars("Z").unwrap();
        let mut m = MachineSpec::new(
            "two",
            bin.clone(),
            z,
            bin,
            "q0",
            "Z",
            LinearBound::new(1, 6).unwrap(),
        )
        .accepting(&["acc"]);
        for (i, out) in outs.iter().enumerate() {
            let q = format!("e{i}");
            m = m.trans("q0", "¢", "Z", &q, "Z", "λ").trans(
                &q,
                "$",
                "Z",
                &format!("f{i}"),
                "Z",
                "λ",
            );
            let mut prev = format!("f{i}");
            for (j, c) in out.chars().enumerate() {
                let next = format!("f{i}_{j}");
                m = m.trans(&prev, "λ", "Z", &next, "Z", &c.to_string());
                prev = next;
            }
            m = m.trans(&prev, "λ", "Z", "acc", "Z", "λ");
            for s in ["0", "1"] {
                m = m.trans(&q, s, "Z", &q, "Z", "λ");
            }
        }
        Machine::new(m).unwrap()
    }

    #[test]
    fn pal_sub_extremes() {
        let m = Machine::new(machines::pal_sub()).unwrap();
        assert_eq!(opt_eval(&m, OptMode::Max, &w("0110")).unwrap(), w("11"));
        assert_eq!(opt_eval(&m, OptMode::Min, &w("0110")).unwrap(), w(""));
        assert!(matches!(
            opt_nfa_el_eval(&m, OptMode::Max, &w("0")),
            Err(Error::StackUse(_))
        ));
    }

    #[test]
    fn equal_length_variant() {
        let m = two_outputs(["00", "11"]);
        assert_eq!(opt_nfa_el_eval(&m, OptMode::Max, &w("1")).unwrap(), w("11"));
        assert_eq!(opt_nfa_el_eval(&m, OptMode::Min, &w("1")).unwrap(), w("00"));
        let m = two_outputs(["0", "11"]);
        assert!(matches!(
            opt_nfa_el_eval(&m, OptMode::Max, &w("")),
            Err(Error::UnequalLengths { .. })
        ));
        let single = two_outputs(["01", "01"]);
        for mode in [OptMode::Max, OptMode::Min] {
            assert_eq!(opt_eval(&single, mode, &w("0")).unwrap(), w("01"));
        }
    }

    #[test]
    fn no_accepting_path_is_an_error() {
        let m = Machine::new(machines::reject_all()).unwrap();
        assert!(matches!(
            opt_eval(&m, OptMode::Max, &w("01")),
            Err(Error::Precondition(_))
        ));
        let f = opt_refinement(&FunctionHandle::from_machine(m), OptMode::Min);
        assert!(matches!(f.eval(&w("01")), Err(Error::Undefined(_))));
    }

    #[test]
    fn opt_dominates_and_refines() {
        let m = Machine::new(machines::pal_sub()).unwrap();
        let bin = Alphabet::binary();
        for x in bin.words_up_to(6) {
            let all = m.enumerate(&x).unwrap();
            let hi = opt_eval(&m, OptMode::Max, &x).unwrap();
            let lo = opt_eval(&m, OptMode::Min, &x).unwrap();
            assert!(all.contains(&hi) && all.contains(&lo));
            for y in &all {
                assert!(dict_compare(y, &hi, &bin).unwrap().is_le());
                assert!(dict_compare(&lo, y, &bin).unwrap().is_le());
            }
        }
        let f = FunctionHandle::from_machine(m);
        for mode in [OptMode::Max, OptMode::Min] {
            let opt = opt_refinement(&f, mode);
            assert!(refinement_check(&f, &opt, 6, Mode::default())
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn parse_mode() {
        assert_eq!("max".parse::<OptMode>().unwrap(), OptMode::Max);
        assert_eq!("min".parse::<OptMode>().unwrap(), OptMode::Min);
        assert!("mid".parse::<OptMode>().is_err());
    }
}
