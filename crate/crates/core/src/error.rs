use thiserror::Error;

use crate::expr_io::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands are defined over different variable lists")]
    VariableMismatch,
    #[error("variable `{0}` is not bound by the substitution")]
    UnboundVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} of the zero polynomial is undefined")]
    ZeroPolynomial(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("map file line {line}: {message}")]
    MapFile { line: usize, message: String },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("elimination ideal for coordinate {coordinate} is not principal ({generators} generators)")]
    NotPrincipal { coordinate: usize, generators: usize },
    #[error("map is not dominant over coordinate {0}: elimination ideal is zero")]
    NonDominant(usize),
    #[error("fiber ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("both formal degrees are zero")]
    DegenerateResultant,
    #[error("polynomial has t-degree {actual} above the formal degree {formal}")]
    DegreeAboveFormal { actual: u32, formal: u32 },
    #[error("exact division failed: {0}")]
    InexactDivision(&'static str),
    #[error("expected a square map, got {components} components in {variables} variables")]
    NotSquare { components: usize, variables: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear part DF(0) is singular")]
    SingularLinearPart,
    #[error("map does not vanish at the origin")]
    NonzeroAtOrigin,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is not primitive (gcd of coordinates is {0})")]
    NotPrimitive(String),
    #[error("no SL(1, Z) matrix maps e1 to -1")]
    NegativeUnitInDimensionOne,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
