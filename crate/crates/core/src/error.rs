use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count {0} is outside 1..=64")]
    AmbientOutOfRange(usize),
    #[error("vector has length {found}, expected ambient length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the ideal contains 1 (unit ideal)")]
    UnitIdeal,
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("characteristic {0} is neither 0 nor a prime below 2^32")]
    BadCharacteristic(u64),
    #[error("homological degree {k} outside -1..={dim}")]
    DegreeOutOfRange { k: isize, dim: isize },
    #[error("face family is not closed under taking subsets")]
    NotClosed,
    #[error("pattern count exceeds the cap of {cap}")]
    PatternCapExceeded { cap: u64 },
    #[error("substitution exponents must all be >= 1")]
    BadSubstitution,
    #[error("input does not satisfy the strictness precondition: {0}")]
    StrictnessPrecondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
