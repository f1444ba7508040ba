use thiserror::Error;

/// Errors raised by the geometry, enumeration and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("empty coordinate list")]
    EmptyCoordinates,

    #[error("cannot project: {0}")]
    UndefinedProjection(&'static str),

    #[error("{what} out of range: {value} (allowed {allowed})")]
    Range {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("duplicate point: index {second} equals index {first}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("weight of point {index} is {weight}, weights must be at least 1")]
    InvalidWeight { index: usize, weight: String },

    #[error("origin index {index} out of range for {n} points")]
    InvalidOrigin { index: usize, n: usize },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown weight function `{0}` (expected one, reciprocal, or step:<t>)")]
    UnknownWeightFn(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
