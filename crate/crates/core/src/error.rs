use thiserror::Error;

use crate::transducer::ViolatingPath;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol `{symbol}` is not in alphabet {alphabet}")]
    UnknownSymbol { symbol: String, alphabet: String },

    #[error("cannot read `{text}` as a word over {alphabet}")]
    UnparsableWord { text: String, alphabet: String },

    #[error("invalid symbol token `{0}`")]
    InvalidToken(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid linear bound {slope}·n + {intercept}: slope + intercept must be at least 1")]
    InvalidBound { slope: u64, intercept: u64 },

    #[error("ill-formed machine `{name}`:\n{violations}")]
    InvalidSpec { name: String, violations: String },

    #[error("machine file line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("termination condition violated on input `{input}`: a path exceeds the budget of {budget} steps\n{path}")]
    Termination {
        input: String,
        budget: u64,
        path: ViolatingPath,
    },

    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("output `{output}` (length {len}) exceeds the declared bound {bound} at input length {input_len}")]
    OutputBound {
        output: String,
        len: usize,
        bound: String,
        input_len: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "machine `{0}` uses its stack; equal-length optimization requires a stack-free machine"
    )]
    StackUse(String),

    #[error("accepting outputs on `{input}` have different lengths ({first} and {second})")]
    UnequalLengths {
        input: String,
        first: usize,
        second: usize,
    },

    #[error("function is undefined at `{0}` but is required to be total")]
    Undefined(String),

    #[error("oracle failed: {0}")]
    Oracle(Box<Error>),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for cap overruns, including those raised inside an oracle.
    pub fn is_resource(&self) -> bool {
        match self {
            Error::Resource { .. } => true,
            Error::Oracle(inner) => inner.is_resource(),
            _ => false,
        }
    }
}
