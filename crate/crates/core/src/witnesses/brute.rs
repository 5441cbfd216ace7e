//! Direct definitions of the witness functions, written without machines.

use crate::strings::{Symbol, Word, NATURAL, PAD};
use crate::transducer::OutputSet;

fn is_palindrome(w: &[Symbol]) -> bool {
    w.iter().eq(w.iter().rev())
}

fn is_bit(s: &Symbol) -> bool {
    s.is("0") || s.is("1")
}

fn binary(w: &[Symbol]) -> bool {
    w.iter().all(is_bit)
}

fn split_on<'a>(w: &'a [Symbol], sep: &str) -> Vec<&'a [Symbol]> {
    w.split(|s| s.is(sep)).collect()
}

/// Every palindromic substring.
pub fn pal_sub(w: &[Symbol]) -> OutputSet {
    let mut out = OutputSet::from([Word::default()]);
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_palindrome(&w[i..j]) {
                out.insert(Word::from(&w[i..j]));
            }
        }
    }
    out
}

/// { x : w = uxxv }.
pub fn square_substring(w: &[Symbol]) -> OutputSet {
    let mut out = OutputSet::new();
    for i in 0..=w.len() {
        for k in 0..=(w.len() - i) / 2 {
            if w[i..i + k] == w[i + k..i + 2 * k] {
                out.insert(Word::from(&w[i..i + k]));
            }
        }
    }
    out
}

pub fn is_palindrome_word(w: &[Symbol]) -> bool {
    is_palindrome(w)
}

/// x#x with x binary.
pub fn is_dup_hash(w: &[Symbol]) -> bool {
    match split_on(w, PAD)[..] {
        [x, y] => binary(x) && x == y,
        _ => false,
    }
}

/// x#xᴿ with x binary.
pub fn is_l_pal(w: &[Symbol]) -> bool {
    match split_on(w, PAD)[..] {
        [x, y] => binary(x) && x.iter().eq(y.iter().rev()),
        _ => false,
    }
}

/// x♮x with x binary.
pub fn is_dup_natural(w: &[Symbol]) -> bool {
    match split_on(w, NATURAL)[..] {
        [x, y] => binary(x) && x == y,
        _ => false,
    }
}

/// {x♮x} on binary x, {λ} otherwise.
pub fn f_dup(x: &[Symbol]) -> OutputSet {
    if !binary(x) {
        return OutputSet::from([Word::default()]);
    }
    let mut y = Word::from(x);
    y.push(Symbol::new(NATURAL));
    y.extend_from(x);
    OutputSet::from([y])
}

/// {x♮xᴿ} on binary x, {λ} otherwise.
pub fn dup_reverse(x: &[Symbol]) -> OutputSet {
    if !binary(x) {
        return OutputSet::from([Word::default()]);
    }
    let mut y = Word::from(x);
    y.push(Symbol::new(NATURAL));
    y.extend_from(&Word::from(x).reversed());
    OutputSet::from([y])
}

/// {u♮vᴿ} on w = u♮v with u, v binary, {λ} otherwise.
pub fn reverse_tail(w: &[Symbol]) -> OutputSet {
    match split_on(w, NATURAL)[..] {
        [u, v] => {
            let mut y = Word::from(u);
            y.push(Symbol::new(NATURAL));
            y.extend_from(&Word::from(v).reversed());
            OutputSet::from([y])
        }
        _ => OutputSet::from([Word::default()]),
    }
}

/// h(x#y) = {y}, {λ} when the `#` count is not one.
pub fn dup_hash_advice(w: &[Symbol]) -> OutputSet {
    match split_on(w, PAD)[..] {
        [_, y] => OutputSet::from([Word::from(y)]),
        _ => OutputSet::from([Word::default()]),
    }
}

/// {λ} ∪ { x_i y_i : w = x₁♮x₂♮x₃#y₁♮y₂♮y₃, x_i = y_iᴿ }.
pub fn prop8_g(w: &[Symbol]) -> OutputSet {
    let mut out = OutputSet::from([Word::default()]);
    let halves = split_on(w, PAD);
    let [left, right] = halves[..] else {
        return out;
    };
    let (xs, ys) = (split_on(left, NATURAL), split_on(right, NATURAL));
    if xs.len() != 3 || ys.len() != 3 {
        return out;
    }
    for (x, y) in xs.iter().zip(&ys) {
        if binary(x) && binary(y) && x.iter().eq(y.iter().rev()) {
            let mut xy = Word::from(*x);
            xy.extend_from(y);
            out.insert(xy);
        }
    }
    out
}
