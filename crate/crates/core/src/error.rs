use thiserror::Error;

/// Errors raised by the orbit calculus and the linear oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {what} {index} (valid range {min}..={max})")]
    Index {
        what: &'static str,
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid marking: row {row} has mark {mark} > length {length}")]
    InvalidMarking { row: usize, mark: i64, length: usize },

    #[error("class mismatch: row {row} lies in class {found}, expected {expected}")]
    ClassMismatch {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("endomorphism is not nilpotent")]
    NotNilpotent,

    #[error("census budget exceeded: {required} > {limit}")]
    Budget { required: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
