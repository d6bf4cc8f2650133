use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("seed value a={0} is invalid, a must be at least 2")]
    InvalidSeed(u64),

    #[error("requested {requested} exceeds the configured cap of {cap}")]
    LimitExceeded { requested: u64, cap: u64 },

    #[error("index {index} is outside the generated prefix of length {len}")]
    OutOfRange { index: u64, len: u64 },

    #[error("records cover indices up to {covered}, need {needed}")]
    InsufficientRecords { needed: u64, covered: u64 },

    #[error("cycle through {start} did not close within {cap} terms")]
    IncompleteCycle { start: u64, cap: u64 },

    #[error("value {0} is not part of any indexed cycle")]
    UnknownValue(u64),

    #[error("f_{a} is undecided after {budget} terms, raise the budget")]
    Undecided { a: u64, budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
