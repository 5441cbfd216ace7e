mod common;

use proptest::prelude::*;

use common::{text, texts, word, Set};
use pdt::algebra::{first_difference, FunctionHandle};
use pdt::par::Mode;
use pdt::pumping::{
    check_decomposition, pumping_report, search_decomposition, PumpOptions, PumpingParams,
};
use pdt::strings::{dict_compare, Alphabet, Word};
use pdt::transducer::{format, LinearBound, Machine};
use pdt::witnesses::{machines, verify_entry};

fn bits(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('0'), Just('1')], 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

fn f_dup_handle() -> FunctionHandle {
    let nat = Alphabet::from_chars("01♮").unwrap();
    FunctionHandle::new(
        "f_dup",
        nat.clone(),
        nat,
        LinearBound::new(2, 1).unwrap(),
        |x| {
            let x = x.iter().map(|s| s.as_str()).collect::<String>();
            let out = if x.contains('♮') {
                Set::from([String::new()])
            } else {
                common::f_dup(&x)
            };
            Ok(out.iter().map(|s| word(s)).collect())
        },
    )
}

fn f_dup_oracle(x: &str) -> Set {
    if x.contains('♮') {
        Set::from([String::new()])
    } else {
        common::f_dup(x)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pal_sub_outputs_are_palindromic_substrings(x in bits(10)) {
        let m = Machine::new(machines::pal_sub()).unwrap();
        for y in texts(&m.enumerate(&word(&x)).unwrap()) {
            prop_assert!(common::is_pal(&y) && x.contains(&y));
        }
    }

    #[test]
    fn dictionary_order_matches_byte_order_on_bits(x in bits(8), y in bits(8)) {
        prop_assert_eq!(dict_compare(&word(&x), &word(&y), &Alphabet::binary()).unwrap(), x.cmp(&y));
    }

    #[test]
    fn f_dup_range_lies_in_dup_natural(x in bits(7)) {
        let f = pdt::witnesses::f_dup_composition();
        let out = texts(&f.eval(&word(&x)).unwrap());
        prop_assert_eq!(out.len(), 1);
        prop_assert!(out.iter().all(|y| common::dup_natural(y)));
    }

    #[test]
    fn pumping_search_agrees_with_enumerator(w in bits(5), m in 1usize..4, c in 0usize..3, d in 0usize..3) {
        prop_assume!(w.len() >= m);
        let f = f_dup_handle();
        let s = format!("{w}♮{w}");
        let params = PumpingParams::new(m, c, d).unwrap();
        let opts = PumpOptions::default();
        let found = search_decomposition(&f, &word(&w), &word(&s), params, &opts, Mode::default()).unwrap();
        let all = common::pumping_splits(&f_dup_oracle, &w, &s, (m, c, d), &[0, 2]);
        prop_assert_eq!(found.is_some(), !all.is_empty());
        if let Some(dec) = found {
            prop_assert_eq!(check_decomposition(&f, &word(&w), &word(&s), &dec, params, &opts).unwrap(), None);
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let pal = FunctionHandle::from_machine(Machine::new(machines::pal_sub()).unwrap());
    let brute = FunctionHandle::new(
        "pal",
        Alphabet::binary(),
        Alphabet::binary(),
        LinearBound::identity(),
        |x| {
            Ok(common::pal_sub(&text(&Word::from(&x[..])))
                .iter()
                .map(|s| word(s))
                .collect())
        },
    );
    for mode in [Mode::Sequential, Mode::Parallel] {
        assert!(first_difference(&pal, &brute, 7, mode).unwrap().is_none());
    }
    let entry = pdt::witnesses::find("square_substring").unwrap();
    assert_eq!(
        verify_entry(&entry, 6, Mode::Sequential).unwrap(),
        verify_entry(&entry, 6, Mode::Parallel).unwrap()
    );
}

#[test]
fn serializer_round_trips_the_corpus() {
    for (_, spec) in machines::corpus() {
        assert_eq!(format::parse(&format::serialize(&spec)).unwrap(), spec);
    }
}

#[test]
fn palindromes_all_pump() {
    let f = FunctionHandle::from_machine(Machine::new(machines::pal_sub()).unwrap());
    let ws: Vec<Word> = ["00100", "0110", "1001001"]
        .iter()
        .map(|s| word(s))
        .collect();
    let params = PumpingParams::new(3, 1, 0).unwrap();
    let report = pumping_report(
        &f,
        params,
        &ws[..1],
        &PumpOptions::up_to(2),
        Mode::default(),
    )
    .unwrap();
    assert_eq!(report.len(), common::pal_sub("00100").len());
    let full: Vec<_> = ws
        .iter()
        .map(|w| {
            let s = w.clone();
            search_decomposition(&f, w, &s, params, &PumpOptions::up_to(2), Mode::default())
                .unwrap()
        })
        .collect();
    assert!(full.iter().all(Option::is_some));
}

#[test]
fn f_dup_report_matches_the_enumerator() {
    let f = f_dup_handle();
    let ws = [word("0011"), word("000111")];
    let params = PumpingParams::new(2, 1, 2).unwrap();
    let report = pumping_report(&f, params, &ws, &PumpOptions::default(), Mode::default()).unwrap();
    for line in &report {
        let all = common::pumping_splits(
            &f_dup_oracle,
            &text(&line.w),
            &text(&line.s),
            (2, 1, 2),
            &[0, 2],
        );
        assert_eq!(line.found.is_some(), !all.is_empty(), "{line}");
    }
}
