use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),

    #[error("level {level} exceeds the configured maximum {max}")]
    LevelTooHigh { level: u32, max: u32 },

    #[error("{p}^{level} does not fit in 64 bits")]
    Overflow { p: u32, level: u32 },

    #[error("value is not a {p}^{m}-th root of unity")]
    NotRootAtLevel { p: u32, m: u32 },

    #[error("phase function has determinant {0}, expected 1")]
    NotSpecial(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("element is not p-torsion")]
    NotTorsion,

    #[error("requires an odd prime: {0}")]
    EvenPrime(String),

    #[error("enumeration needs {needed} elements, budget is {budget}")]
    Budget { needed: u128, budget: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("output table is not deterministic at input {0:?}")]
    NonDeterministic(Vec<u32>),
}

pub type Result<T> = std::result::Result<T, Error>;
