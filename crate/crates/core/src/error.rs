use thiserror::Error;

use crate::ratpoly::MPoly;

/// Failures of exact polynomial arithmetic.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum PolyError {
    #[error("division left a nonzero remainder: {remainder}")]
    NonzeroRemainder { remainder: MPoly },
    #[error("divisor {divisor} is not a product of 1-x, 1-x-y, 1-x-y-z")]
    UnsupportedDivisor { divisor: MPoly },
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Errors raised by the special-function layer and parameter validation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MathError {
    #[error("zero factor in a denominator: {0}")]
    PoleHit(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("eigen-solver did not converge for {0}")]
    ConvergenceFailure(String),
    #[error("collapsed weight is not integrable: {0}")]
    DegenerateParameters(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
