use std::sync::Arc;

use super::*;
use crate::oracle::PredicateOracle;
use crate::witnesses::{brute, f_dup_composition, machines};

fn w(s: &str) -> Word {
    Word::from_chars(s)
}

fn set(items: &[&str]) -> OutputSet {
    items.iter().map(|s| w(s)).collect()
}

fn bin() -> Alphabet {
    Alphabet::binary()
}

fn pal_sub() -> FunctionHandle {
    FunctionHandle::from_machine(Machine::new(machines::pal_sub()).unwrap())
}

fn brute_pal_sub() -> FunctionHandle {
    FunctionHandle::new("pal", bin(), bin(), LinearBound::identity(), |x| {
        Ok(brute::pal_sub(x))
    })
}

fn substrings_of_len(k: usize) -> FunctionHandle {
    FunctionHandle::new("sub_k", bin(), bin(), LinearBound::identity(), move |x| {
        Ok(x.windows(k).map(Word::from).collect())
    })
}

fn eta_all() -> FunctionHandle {
    FunctionHandle::from_machine(Machine::new(machines::eta_all()).unwrap())
}

fn singleton_lambda() -> FunctionHandle {
    FunctionHandle::new("λ", bin(), bin(), LinearBound::identity(), |_| {
        Ok(set(&[""]))
    })
}

#[test]
fn intersect_examples() {
    let f = pal_sub();
    assert_eq!(
        intersect(&f, &substrings_of_len(2))
            .unwrap()
            .eval(&w("0110"))
            .unwrap(),
        set(&["11"])
    );
    assert_eq!(
        intersect(&f, &f).unwrap().eval(&w("0110")).unwrap(),
        f.eval(&w("0110")).unwrap()
    );
    let only_lambda = singleton_lambda();
    assert!(intersect(&substrings_of_len(1), &only_lambda)
        .unwrap()
        .eval(&w("01"))
        .unwrap()
        .is_empty());
}

#[test]
fn union_examples() {
    let nat = Alphabet::from_chars("01♮").unwrap();
    let f = FunctionHandle::new(
        "pal",
        nat.clone(),
        nat.clone(),
        LinearBound::new(2, 1).unwrap(),
        |x| Ok(brute::pal_sub(x)),
    );
    let dup = FunctionHandle::new(
        "dup",
        nat.clone(),
        nat,
        LinearBound::new(2, 1).unwrap(),
        |x| Ok(brute::f_dup(x)),
    );
    assert_eq!(
        union(&f, &dup).unwrap().eval(&w("01")).unwrap(),
        set(&["", "0", "1", "01♮01"])
    );
    let und = FunctionHandle::undefined(bin(), bin());
    let p = pal_sub();
    assert_eq!(
        union(&p, &und).unwrap().eval(&w("0110")).unwrap(),
        p.eval(&w("0110")).unwrap()
    );
}

#[test]
fn complement_examples() {
    let und = FunctionHandle::undefined(bin(), bin());
    let co = complement(&und, LinearBound::identity(), 0);
    assert_eq!(co.eval(&w("01")).unwrap().len(), 7);
    let co = complement(&eta_all(), LinearBound::new(0, 1).unwrap(), 0);
    assert_eq!(co.eval(&w("0")).unwrap(), set(&["", "0"]));
    let co = complement(&und, LinearBound::identity(), 3);
    assert!(co.eval(&w("01")).unwrap().is_empty());
    let capped = complement_capped(&und, LinearBound::new(4, 0).unwrap(), 0, 100);
    assert!(capped.eval(&w("01")).unwrap_err().is_resource());
}

#[test]
fn complement_of_eta_all_matches_brute_force() {
    // Σ^{≤1} minus {"1"}.
    let universe: OutputSet = bin()
        .words_up_to(1)
        .into_iter()
        .filter(|y| *y != w("1"))
        .collect();
    let co = complement(&eta_all(), LinearBound::new(0, 1).unwrap(), 0);
    assert_eq!(co.eval(&w("0")).unwrap(), universe);
    assert_eq!(universe, set(&["", "0"]));
}

#[test]
fn difference_examples() {
    let f = pal_sub();
    let und = FunctionHandle::undefined(bin(), bin());
    assert_eq!(
        set_difference(&f, &singleton_lambda())
            .unwrap()
            .eval(&w("0110"))
            .unwrap(),
        set(&["0", "1", "11", "0110"])
    );
    assert_eq!(
        set_difference(&f, &und).unwrap().eval(&w("01")).unwrap(),
        f.eval(&w("01")).unwrap()
    );
    assert!(set_difference(&f, &f)
        .unwrap()
        .eval(&w("0110"))
        .unwrap()
        .is_empty());
}

#[test]
fn compose_examples() {
    let f = f_dup_composition();
    assert_eq!(f.eval(&w("01")).unwrap(), set(&["01♮01"]));
    let id = FunctionHandle::identity(bin());
    let p = pal_sub();
    assert_eq!(
        compose(&id, &p).unwrap().eval(&w("0110")).unwrap(),
        p.eval(&w("0110")).unwrap()
    );
    let und = FunctionHandle::undefined(bin(), bin());
    assert!(compose(&p, &und)
        .unwrap()
        .eval(&w("01"))
        .unwrap()
        .is_empty());
    let nat = Alphabet::from_chars("01♮").unwrap();
    let wrong = FunctionHandle::identity(nat);
    assert!(matches!(
        compose(&wrong, &wrong.clone()).map(|_| ()),
        Ok(())
    ));
    assert!(matches!(
        compose(&p, &wrong),
        Err(Error::AlphabetMismatch(_))
    ));
}

#[test]
fn alphabet_mismatch_is_reported() {
    let nat = Alphabet::from_chars("01♮").unwrap();
    let other = FunctionHandle::identity(nat);
    assert!(matches!(
        intersect(&pal_sub(), &other),
        Err(Error::AlphabetMismatch(_))
    ));
    assert!(matches!(
        union(&pal_sub(), &other),
        Err(Error::AlphabetMismatch(_))
    ));
}

#[test]
fn refinement_examples() {
    let f = pal_sub();
    let mode = Mode::default();
    assert!(refinement_check(&f, &f, 6, mode).unwrap().holds());
    let min = FunctionHandle::new("min", bin(), bin(), LinearBound::identity(), |_| {
        Ok(set(&[""]))
    });
    assert!(refinement_check(&f, &min, 6, mode).unwrap().holds());
    let pal: SharedOracle = Arc::new(PredicateOracle::palindromes(bin()));
    let eta = quasi_char_fn(pal);
    let und = FunctionHandle::undefined(bin(), bin());
    assert_eq!(
        refinement_check(&eta, &und, 6, mode).unwrap(),
        Refinement::DomainMismatch { input: w("") }
    );
    let wide = FunctionHandle::new("wide", bin(), bin(), LinearBound::identity(), |x| {
        Ok(OutputSet::from([x.clone()]))
    });
    assert_eq!(
        refinement_check(&f, &wide, 6, mode).unwrap(),
        Refinement::NotContained {
            input: w("01"),
            extra: w("01")
        }
    );
}

#[test]
fn domain_and_range() {
    let mode = Mode::default();
    let pal: SharedOracle = Arc::new(PredicateOracle::palindromes(bin()));
    let eta = quasi_char_fn(pal);
    let want: BTreeSet<Word> = bin()
        .words_up_to(5)
        .into_iter()
        .filter(|x| brute::is_palindrome_word(x))
        .collect();
    assert_eq!(domain(&eta, 5, mode).unwrap(), want);

    let nat = Alphabet::from_chars("01♮").unwrap();
    let dup = FunctionHandle::new("dup", bin(), nat, LinearBound::new(2, 1).unwrap(), |x| {
        Ok(brute::f_dup(x))
    });
    let want: BTreeSet<Word> = bin()
        .words_up_to(4)
        .iter()
        .flat_map(|x| brute::f_dup(x))
        .collect();
    assert_eq!(range(&dup, 4, mode).unwrap(), want);
    assert_eq!(want.len(), 31);
    assert!(range(&FunctionHandle::undefined(bin(), bin()), 4, mode)
        .unwrap()
        .is_empty());
}

#[test]
fn characteristic_functions() {
    let none: SharedOracle = Arc::new(PredicateOracle::none(bin()));
    let pal: SharedOracle = Arc::new(PredicateOracle::palindromes(bin()));
    let (chi0, eta0) = (char_fn(none.clone()), quasi_char_fn(none));
    let (chi, eta) = (char_fn(pal.clone()), quasi_char_fn(pal));
    for x in bin().words_up_to(6) {
        assert_eq!(chi0.eval(&x).unwrap(), set(&["0"]));
        assert!(eta0.eval(&x).unwrap().is_empty());
        if brute::is_palindrome_word(&x) {
            assert_eq!(chi.eval(&x).unwrap(), set(&["1"]));
            assert_eq!(eta.eval(&x).unwrap(), set(&["1"]));
        } else {
            assert_eq!(chi.eval(&x).unwrap(), set(&["0"]));
            assert!(eta.eval(&x).unwrap().is_empty());
        }
    }
}

#[test]
fn output_bound_is_enforced() {
    let liar = FunctionHandle::new("liar", bin(), bin(), LinearBound::new(0, 1).unwrap(), |x| {
        Ok(OutputSet::from([x.clone()]))
    });
    assert!(liar.eval(&w("0")).is_ok());
    assert!(matches!(
        liar.eval(&w("01")),
        Err(Error::OutputBound { .. })
    ));
}

#[test]
fn identities_on_short_inputs() {
    let mode = Mode::default();
    let p = LinearBound::identity();
    let f = pal_sub();
    let g = brute_pal_sub();
    let h = substrings_of_len(2);
    let none =
        |a: &FunctionHandle, b: &FunctionHandle| first_difference(a, b, 6, mode).unwrap().is_none();
    assert!(none(&complement(&complement(&f, p, 0), p, 0), &f));
    assert!(none(
        &set_difference(&f, &h).unwrap(),
        &intersect(&f, &complement(&h, p, 0)).unwrap()
    ));
    assert!(none(&union(&f, &h).unwrap(), &union(&h, &f).unwrap()));
    assert!(none(
        &intersect(&f, &h).unwrap(),
        &intersect(&h, &f).unwrap()
    ));
    assert!(none(
        &intersect(&intersect(&f, &g).unwrap(), &h).unwrap(),
        &intersect_all(&[f.clone(), g.clone(), h.clone()]).unwrap()
    ));
    assert!(none(
        &union(&union(&f, &g).unwrap(), &h).unwrap(),
        &union(&f, &union(&g, &h).unwrap()).unwrap()
    ));
    let id = FunctionHandle::identity(bin());
    assert!(none(
        &compose(&f, &compose(&h, &id).unwrap()).unwrap(),
        &compose(&compose(&f, &h).unwrap(), &id).unwrap()
    ));
}

#[test]
fn nivat_examples() {
    let tracks = Alphabet::track(
        &Alphabet::from_chars("01♮").unwrap(),
        &Alphabet::from_chars("01♮").unwrap(),
    );
    let all = PredicateOracle::all(tracks.clone());
    let none = PredicateOracle::none(tracks.clone());
    let p = LinearBound::identity();
    assert!(nivat_check(&all, p, &w("01"), &w("0"), 4).unwrap());
    assert!(!nivat_check(&none, p, &w("01"), &w("0"), 4).unwrap());
    assert!(!nivat_check(&all, p, &w("0"), &w("01"), 4).unwrap());
    // Projections of both tracks agree once ♮ is erased.
    let equal = PredicateOracle::new("equal projections", tracks, |t| {
        let Ok(ts) = crate::strings::TrackedString::decode(t) else {
            return false;
        };
        crate::strings::project_naturals(&ts.upper) == crate::strings::project_naturals(&ts.lower)
    });
    assert!(nivat_check(&equal, p, &w("01"), &w("01"), 4).unwrap());
    assert!(!nivat_check(&equal, p, &w("01"), &w("10"), 4).unwrap());
    assert!(nivat_check_capped(&all, p, &w("01"), &w("01"), 8, 10)
        .unwrap_err()
        .is_resource());
}

#[test]
fn advice_examples() {
    let h = FunctionHandle::from_machine(Machine::new(machines::dup_hash_advice()).unwrap());
    let b = crate::oracle::language_from_machine(machines::dup_hash_track_checker()).unwrap();
    assert!(advice_membership(&b, &h, &w("01#01")).unwrap());
    assert!(!advice_membership(&b, &h, &w("01#10")).unwrap());
    let und = FunctionHandle::undefined(h.input_alphabet().clone(), bin());
    for x in ["01#01", "#", ""] {
        assert!(!advice_membership(&b, &und, &w(x)).unwrap());
    }
}
