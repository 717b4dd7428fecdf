use thiserror::Error;

/// Errors produced while validating inputs or computing curve invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,
    #[error("a sequence needs at least 2 values, got {0}")]
    TooShort(usize),
    #[error("values must be positive, got {0}")]
    NonPositive(i64),
    #[error("values must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("gcd must be 1, got gcd {0}")]
    GcdNotOne(i64),
    #[error("value {value} exceeds the supported maximum {max}")]
    TooLarge { value: i64, max: i64 },
    #[error("{0} is not a nonzero element of the semigroup")]
    BaseNotInSemigroup(i64),
    #[error("Apéry search for first coordinate {nu} passed its bound {bound}")]
    AperyBoundExceeded { nu: i64, bound: i64 },
    #[error("the curve is not Cohen-Macaulay")]
    NotCohenMacaulay,
    #[error("family {family} is not defined for {param}")]
    OutOfFamilyRange { family: &'static str, param: String },
    #[error("scan bound {max_an} exceeds the configured cap {cap}")]
    CapExceeded { max_an: i64, cap: i64 },
    #[error("scans support sequence lengths 2, 3 and 4, got {0}")]
    UnsupportedScanLength(usize),
    #[error("degree {0} is too large for the brute-force oracle")]
    DegreeTooLargeForOracle(i64),
    #[error("oracle range exceeded: {0}")]
    OracleRangeExceeded(String),
    #[error("movement search supports at most 128 curve generators, got {0}")]
    TooManyGenerators(usize),
    #[error("integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
