//! Data-parallel batch helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Mode::Parallel`] spreads work
//! over the rayon pool; without it every mode runs sequentially. Results
//! are identical either way: ordered maps keep input order and searches
//! return the first hit in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

impl Mode {
    fn parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Mode::Parallel
    }
}

pub(crate) fn try_map<T, R, F>(mode: Mode, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// First `Some` (or first error) in input order.
pub(crate) fn try_find_first<T, R, F>(mode: Mode, items: &[T], f: F) -> Result<Option<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<Option<R>> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items
            .par_iter()
            .find_map_first(|item| f(item).transpose())
            .transpose();
    }
    let _ = mode;
    for item in items {
        if let Some(hit) = f(item)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}
