use thiserror::Error;

/// Errors produced by the arithmetic, algebra and module-structure layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("{value} is not invertible modulo {p}")]
    NotInvertible { value: i64, p: u32 },

    #[error("binomial C({i}, {k}) requested outside 0 <= k <= i")]
    BinomialOutOfRange { i: i64, k: i64 },

    #[error("index {index} outside [0, {bound})")]
    IndexOutOfRange { index: i64, bound: i64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    #[error("tolerance {tolerance} is below the required {required}")]
    ToleranceInsufficient { tolerance: i64, required: i64 },

    #[error("valuation mismatch: expected {expected}, found {found}")]
    ValuationMismatch { expected: String, found: String },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
