use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty token in {0:?}")]
    EmptyToken(String),
    #[error("invalid integer {0:?}")]
    InvalidInteger(String),
    #[error("value {value} out of range 1..={len}")]
    ValueOutOfRange { value: u64, len: usize },
    #[error("duplicate value {0}")]
    DuplicateValue(u32),
    #[error("operation requires a non-empty permutation")]
    EmptyPermutation,
    #[error("argument must be positive")]
    NonPositive,
    #[error("component {index} ({component}) is not minus-indecomposable")]
    NotMinusIndecomposable { index: usize, component: String },
    #[error("not a Parker sequence: entry {entry} at position {position} exceeds {bound}")]
    NotParker { position: usize, entry: u32, bound: usize },
    #[error("{what} of {requested} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, requested: usize, cap: usize },
    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm { expected: &'static str, found: String },
    #[error("truncation order {order} too small, need at least {needed}")]
    TruncationTooSmall { order: usize, needed: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
