use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid interval [{start}, {end}): start must be strictly less than end")]
    EmptyInterval { start: u64, end: u64 },

    #[error("coverage cap k must be at least 1 (got {0})")]
    InvalidCap(u64),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("coordinate {0} is not a delimiter of the coverage tree")]
    NotADelimiter(u64),

    #[error("empty range")]
    EmptyRange,

    #[error("instance has {n} intervals, above the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
