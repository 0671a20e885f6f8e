use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library.
///
/// Negative answers (a polynomial that is not Kronecker, an orbit that does
/// not repeat) are not errors; they are reported through [`crate::Verdict`]
/// and [`crate::poly::Orbit`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("expected a monic polynomial of degree at least 1")]
    NotMonic,

    #[error("expected a nonzero constant term")]
    ZeroConstantTerm,

    #[error("expected a polynomial of degree at least 1")]
    ConstantPolynomial,

    #[error("power sums are not those of an integer polynomial: {numerator} is not divisible by {step}")]
    NonIntegral { step: usize, numerator: BigInt },

    #[error("need at least {needed} power sums, got {got}")]
    TooFewPowerSums { needed: usize, got: usize },

    #[error("degree {degree} exceeds the guard limit {limit}; pass an override to run anyway")]
    GuardExceeded { degree: usize, limit: usize },

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("numeric root finder failed: {0}")]
    Numeric(String),

    #[error("k({n}) mismatch: {detail}")]
    Mismatch { n: usize, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
