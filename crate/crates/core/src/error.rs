use thiserror::Error;

use crate::stanley::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("monomial has {found} exponents, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a variable context needs at least one variable")]
    EmptyContext,
    #[error("variable names must be distinct, `{0}` repeats")]
    DuplicateName(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("invalid edge ({0}, {1}) for {2} vertices")]
    InvalidEdge(usize, usize, usize),
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("the module is zero")]
    ZeroModule,
    #[error("monomial {0} is not in the integral closure")]
    NotInClosure(String),
    #[error("the smaller ideal is not contained in the larger one")]
    NotContained,
    #[error("prime must involve at least one variable")]
    EmptyPrime,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Stanley decomposition: {0}")]
    InvalidDecomposition(Violation),
    #[error("k = {k} is not a multiple of the uniform exponent {required}")]
    InvalidUniformExponent { k: u32, required: u32 },
    #[error("ideal is not integrally closed")]
    NotIntegrallyClosed,
    #[error("analytic spread undetermined within horizon {0}")]
    UndeterminedSpread(usize),
    #[error("horizon must be at least {0}")]
    HorizonTooSmall(usize),
    #[error("invalid random ideal spec: {0}")]
    InvalidRandomSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for malformed input text, as opposed to a mathematical rejection.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}
