use std::collections::BTreeMap;

use super::FunctionHandle;
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::strings::{natural_extensions, track_pair, Symbol, Word, NATURAL};
use crate::transducer::{Limits, LinearBound};

/// Whether `y` is related to `x` through the track language `a`: |y| ≤
/// p(|x|) and some equal-length ♮-extensions x̃, ỹ of length at most
/// `ext_len` have ⟨x̃,ỹ⟩ ∈ `a`.
pub fn nivat_check(
    a: &dyn Oracle,
    p: LinearBound,
    x: &[Symbol],
    y: &[Symbol],
    ext_len: usize,
) -> Result<bool> {
    nivat_check_capped(a, p, x, y, ext_len, Limits::default().max_enumeration)
}

pub fn nivat_check_capped(
    a: &dyn Oracle,
    p: LinearBound,
    x: &[Symbol],
    y: &[Symbol],
    ext_len: usize,
    cap: usize,
) -> Result<bool> {
    if x.iter().chain(y).any(|s| s.is(NATURAL)) {
        return Err(Error::Precondition("♮ may not occur in x or y".into()));
    }
    if y.len() as u64 > p.eval(x.len()) {
        return Ok(false);
    }
    let by_len = |w: &[Symbol]| -> Result<BTreeMap<usize, Vec<Word>>> {
        let mut map: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
        for e in natural_extensions(w, ext_len)? {
            map.entry(e.len()).or_default().push(e);
        }
        Ok(map)
    };
    let (xs, ys) = (by_len(x)?, by_len(y)?);
    let pairs: usize = xs
        .iter()
        .map(|(n, v)| v.len().saturating_mul(ys.get(n).map_or(0, Vec::len)))
        .fold(0usize, usize::saturating_add);
    if pairs > cap {
        return Err(Error::Resource {
            what: format!("♮-extension pairs up to length {ext_len}"),
            cap,
        });
    }
    for (n, x_exts) in &xs {
        let Some(y_exts) = ys.get(n) else { continue };
        for xe in x_exts {
            for ye in y_exts {
                if a.contains(&track_pair(xe, ye)?.rendered)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Membership in the language defined by the advice operator: some
/// y ∈ h(x) has ⟨x,y⟩ ∈ `b`.
pub fn advice_membership(b: &dyn Oracle, h: &FunctionHandle, x: &Word) -> Result<bool> {
    for y in h.eval(x)? {
        if b.contains(&track_pair(x, &y)?.rendered)? {
            return Ok(true);
        }
    }
    Ok(false)
}
