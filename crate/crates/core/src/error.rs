use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("Pfaffian requires an even index set, got {0} indices")]
    OddPfaffian(usize),

    #[error("Jacobi identity fails for ({i}, {j}, {l}): residual {residual:?}")]
    JacobiViolation {
        i: usize,
        j: usize,
        l: usize,
        residual: Vec<Rational>,
    },

    #[error("bracket data for ({i}, {j}) is inconsistent with antisymmetry")]
    AntisymmetryViolation { i: usize, j: usize },

    #[error("invalid Lie algebra input: {0}")]
    InvalidInput(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not a weight: the functional does not vanish on the derived subalgebra")]
    NotAWeight,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
