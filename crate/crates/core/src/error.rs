use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator not invertible modulo {0}")]
    NotInvertibleMod(u64),
    #[error("{0} is not a prime congruent to 1 mod 4")]
    BadModulus(u64),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("operator has mixed parity")]
    MixedParity,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("image of basis vector {index} leaves the subspace")]
    NotInvariant { index: usize },
    #[error("vectors are linearly dependent: {0}")]
    Dependent(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
