use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("not multiplicity-free: {0}")]
    NotMultiplicityFree(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} must exceed 2d+2 = {bound}")]
    ModulusTooSmall { modulus: u64, bound: u64 },
    #[error("diameter {0} is below the QRacah minimum of 3")]
    DiameterTooSmall(usize),
    #[error("inadmissible tuple: {0}")]
    InadmissibleTuple(String),
    #[error("invalid parameter array: {0}")]
    InvalidArray(String),
    #[error("q^2 = q^-2, cannot solve for a")]
    DegenerateQ,
    #[error("x^2 - {0} x + 1 has no root in the field")]
    NoRootInField(String),
    #[error("inconsistent relation data: {0}")]
    Inconsistent(String),
    #[error("matrix is not in span{{I, A, A*, AA*, A*A}}")]
    NotInSpan,
    #[error("I, A, A*, AA*, A*A are linearly dependent")]
    DependentBasis,
    #[error("no invertible symmetrizer exists")]
    NoSymmetrizer,
    #[error("symmetrizer not unique: nullspace dimension {0}")]
    NonUnique(usize),
    #[error("split basis is degenerate at column {0}")]
    DegenerateBasis(usize),
    #[error("no admissible tuple found after {0} attempts")]
    NoAdmissibleFound(usize),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
