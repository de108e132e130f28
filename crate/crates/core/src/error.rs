use thiserror::Error;

/// Errors raised by the combinatorial and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),
    #[error("{e} and {m} are not coprime")]
    NotCoprime { e: usize, m: usize },
    #[error("partition {partition} is not a {e}-core")]
    NotCore { partition: String, e: usize },
    #[error("value {value} outside the range [0, {bound})")]
    OutOfRange { value: i64, bound: usize },
    #[error("expected {expected} components, got {found}")]
    ComponentMismatch { expected: usize, found: usize },
    #[error("the specialized sigma ratio omega equals 1 at the primitive {0}-th root of unity")]
    OmegaIsOne(usize),
    #[error("same-core and equal-key criteria disagree for {left} and {right}")]
    EquivalenceViolation { left: String, right: String },
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
    #[error("degree congruence violated for {partition} modulo Phi_{e}: {detail}")]
    TheoremViolation {
        partition: String,
        e: usize,
        detail: String,
    },
    #[error("the zero polynomial has no cyclotomic multiplicity")]
    ZeroPolynomial,
    #[error("cuspidal pair has a = 0, so its Hecke algebra is trivial")]
    TrivialSeries,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_modulus(e: usize) -> Result<()> {
    if e == 0 {
        Err(Error::InvalidModulus(0))
    } else {
        Ok(())
    }
}
