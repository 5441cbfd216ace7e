//! Direct string-level definitions used as test oracles. Nothing here
//! touches the library's symbol or machine types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pdt::strings::Word;
use pdt::transducer::OutputSet;

pub type Set = BTreeSet<String>;

pub fn text(w: &Word) -> String {
    w.to_string()
}

pub fn texts(set: &OutputSet) -> Set {
    set.iter().map(text).collect()
}

pub fn word(s: &str) -> Word {
    Word::from_chars(s)
}

/// Every string over `alphabet` (one char per symbol) of length ≤ max.
pub fn strings(alphabet: &str, max: usize) -> Vec<String> {
    let mut all = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|p| alphabet.chars().map(move |c| format!("{p}{c}")))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn rev(s: &str) -> String {
    s.chars().rev().collect()
}

fn is_bits(s: &str) -> bool {
    s.chars().all(|c| c == '0' || c == '1')
}

pub fn one() -> Set {
    Set::from(["1".to_string()])
}

pub fn eta(member: bool) -> Set {
    if member {
        one()
    } else {
        Set::new()
    }
}

pub fn pal_sub(w: &str) -> Set {
    let c = chars(w);
    let mut out = Set::from([String::new()]);
    for i in 0..c.len() {
        for j in i..c.len() {
            let x: String = c[i..=j].iter().collect();
            if x == rev(&x) {
                out.insert(x);
            }
        }
    }
    out
}

pub fn square_substring(w: &str) -> Set {
    let c = chars(w);
    let mut out = Set::new();
    for i in 0..=c.len() {
        for j in i..=c.len() {
            let x: String = c[i..j].iter().collect();
            let rest: String = c[j..].iter().collect();
            if rest.starts_with(&x) {
                out.insert(x);
            }
        }
    }
    out
}

pub fn is_pal(w: &str) -> bool {
    w == rev(w)
}

pub fn f_dup(x: &str) -> Set {
    Set::from([format!("{x}♮{x}")])
}

pub fn dup_hash(w: &str) -> bool {
    match w.split_once('#') {
        Some((x, y)) => is_bits(x) && x == y,
        None => false,
    }
}

pub fn l_pal(w: &str) -> bool {
    match w.split_once('#') {
        Some((x, y)) => is_bits(x) && is_bits(y) && y == rev(x),
        None => false,
    }
}

pub fn dup_natural(w: &str) -> bool {
    match w.split_once('♮') {
        Some((x, y)) => is_bits(x) && x == y,
        None => false,
    }
}

pub fn prop8_g(w: &str) -> Set {
    let mut out = Set::from([String::new()]);
    let Some((l, r)) = w.split_once('#') else {
        return out;
    };
    let xs: Vec<&str> = l.split('♮').collect();
    let ys: Vec<&str> = r.split('♮').collect();
    if r.contains('#') || xs.len() != 3 || ys.len() != 3 {
        return out;
    }
    for (x, y) in xs.iter().zip(&ys) {
        if is_bits(x) && is_bits(y) && *x == rev(y) {
            out.insert(format!("{x}{y}"));
        }
    }
    out
}

/// Over {0,1}, byte order on strings is dictionary order.
pub fn prop8_max(w: &str) -> Set {
    Set::from([prop8_g(w).into_iter().max().expect("λ is always present")])
}

/// A split w = uvxyz, s = abpqr, as char offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub parts: [String; 10],
}

/// Every split of (w, s) satisfying the strict pumping conditions for the
/// pump counts in `counts`, found by plain nested loops.
pub fn pumping_splits(
    f: &dyn Fn(&str) -> Set,
    w: &str,
    s: &str,
    (m, c, d): (usize, usize, usize),
    counts: &[usize],
) -> Vec<Split> {
    let (wc, sc) = (chars(w), chars(s));
    let cut = |v: &[char], i: usize, j: usize| -> String { v[i..j].iter().collect() };
    let mut found = Vec::new();
    for i1 in 0..=wc.len() {
        for i2 in i1..=wc.len() {
            for i3 in i2..=wc.len() {
                for i4 in i3..=wc.len() {
                    let (u, v, x, y, z) = (
                        cut(&wc, 0, i1),
                        cut(&wc, i1, i2),
                        cut(&wc, i2, i3),
                        cut(&wc, i3, i4),
                        cut(&wc, i4, wc.len()),
                    );
                    if v.chars().count() + x.chars().count() + y.chars().count() > m {
                        continue;
                    }
                    for j1 in 0..=sc.len() {
                        for j2 in j1..=sc.len() {
                            for j3 in j2..=sc.len() {
                                for j4 in j3..=sc.len() {
                                    let (a, b, p, q, r) = (
                                        cut(&sc, 0, j1),
                                        cut(&sc, j1, j2),
                                        cut(&sc, j2, j3),
                                        cut(&sc, j3, j4),
                                        cut(&sc, j4, sc.len()),
                                    );
                                    let bq = (j2 - j1) + (j4 - j3);
                                    if (i2 - i1) + (i4 - i3) + bq == 0 || bq > c * m + d {
                                        continue;
                                    }
                                    let ok = counts.iter().all(|&i| {
                                        let input =
                                            format!("{u}{}{x}{}{z}", v.repeat(i), y.repeat(i));
                                        let output =
                                            format!("{a}{}{p}{}{r}", b.repeat(i), q.repeat(i));
                                        f(&input).contains(&output)
                                    });
                                    if ok {
                                        found.push(Split {
                                            parts: [
                                                u.clone(),
                                                v.clone(),
                                                x.clone(),
                                                y.clone(),
                                                z.clone(),
                                                a,
                                                b,
                                                p,
                                                q,
                                                r,
                                            ],
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    found
}
