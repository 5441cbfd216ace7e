//! Nondeterministic pushdown transducers with linear step budgets, the
//! operator algebra over the multi-valued functions they compute, oracle
//! relativization, dictionary-order optimization and functional pumping.
//!
//! ```
//! use pdt::strings::Word;
//! use pdt::transducer::Machine;
//! use pdt::witnesses::machines;
//!
//! let m = Machine::new(machines::pal_sub()).unwrap();
//! let out = m.enumerate(&Word::from_chars("0110")).unwrap();
//! assert_eq!(out.len(), 5);
//! ```

pub mod algebra;
pub mod error;
pub mod optimize;
pub mod oracle;
pub mod par;
pub mod pumping;
pub mod strings;
pub mod transducer;
pub mod witnesses;

pub use error::{Error, Result};
