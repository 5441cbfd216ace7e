use std::collections::BTreeSet;

use super::{Symbol, Word, NATURAL};
use crate::error::{Error, Result};

/// Erases every ♮.
pub fn project_naturals(word: &[Symbol]) -> Word {
    word.iter().copied().filter(|s| !s.is(NATURAL)).collect()
}

/// All ♮-extensions of `x` of length at most `max_len`.
///
/// Empty when `max_len < |x|`. Fails if `x` already contains ♮.
pub fn natural_extensions(x: &[Symbol], max_len: usize) -> Result<BTreeSet<Word>> {
    if x.iter().any(|s| s.is(NATURAL)) {
        return Err(Error::Precondition(format!(
            "`{}` already contains ♮",
            Word::from(x)
        )));
    }
    let natural = Symbol::new(NATURAL);
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(max_len);
    for len in x.len()..=max_len {
        place(x, len, natural, &mut buf, &mut out);
    }
    Ok(out)
}

// Fills `buf` up to `len` symbols, spending the rest of `x` and ♮s.
fn place(
    x: &[Symbol],
    len: usize,
    natural: Symbol,
    buf: &mut Vec<Symbol>,
    out: &mut BTreeSet<Word>,
) {
    if buf.len() == len {
        if x.is_empty() {
            out.insert(Word::from(buf.as_slice()));
        }
        return;
    }
    let room = len - buf.len();
    if let Some((&first, rest)) = x.split_first() {
        buf.push(first);
        place(rest, len, natural, buf, out);
        buf.pop();
    }
    if room > x.len() {
        buf.push(natural);
        place(x, len, natural, buf, out);
        buf.pop();
    }
}
