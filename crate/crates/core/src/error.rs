use thiserror::Error;

/// Errors raised by the morphology, sampling and I/O layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ceiling mismatch: {left} vs {right}")]
    CeilingMismatch { left: u32, right: u32 },

    #[error("empty structuring element")]
    EmptyStructuringElement,

    #[error("grey value {value} outside [0, {ceiling}]")]
    ValueOutOfRange { value: u32, ceiling: u32 },

    #[error("invalid ceiling {0}: must be positive")]
    InvalidCeiling(u32),

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("vertical umbra offset must be non-negative, got {0}")]
    NegativeOffset(i64),

    #[error("operation requires a non-empty set")]
    EmptySet,

    #[error("window does not contain {0}")]
    WindowTooSmall(String),

    #[error("image is not sampled: point {0} lies off the sieve")]
    NotSampled(String),

    #[error("invalid sieve spacing {0:?}: every entry must be positive")]
    InvalidSieve(Vec<i64>),

    #[error("filter does not satisfy the sampling conditions: {0}")]
    InvalidFilter(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("enumeration of {requested} evaluations exceeds the limit of {limit}")]
    BoundsTooLarge { requested: u128, limit: u128 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for MorphError {
    fn from(err: std::io::Error) -> Self {
        MorphError::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, MorphError>;
