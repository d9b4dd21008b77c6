use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("the zero polynomial does not define a finite zero set")]
    ZeroPolynomial,
    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("condition list is empty")]
    EmptyConditionList,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("query for exponent vector {0:?} was expected in the ledger but is missing")]
    CacheMiss(Vec<u8>),
    #[error("inconsistent query values: {0}")]
    Inconsistent(String),
    #[error("invalid root specification: {0}")]
    InvalidRootSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}
