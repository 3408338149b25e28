use thiserror::Error;

/// Location-tagged failure from the input language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("weight must be a positive integer, got '{0}'")]
    NonPositiveWeight(String),
    #[error("expected {expected} weights, found {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("division is not supported (only integer/integer literals)")]
    DivisionUnsupported,
    #[error("exponent exceeds the 16-bit limit")]
    ExponentOverflow,
    #[error("literal is not representable in the coefficient field: {0}")]
    BadLiteral(String),
    #[error("unexpected token '{0}'")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("{0}")]
    Malformed(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("cone singularity is not isolated: {0}")]
    NonIsolatedSingularity(String),
    #[error("generators do not form a regular sequence: {0}")]
    NotRegularSequence(String),
    #[error("report range is not symmetric about the center {center}: [{k_min}, {k_max}]")]
    AsymmetricRange { center: i64, k_min: i64, k_max: i64 },
    #[error("Betti window too small: {0}")]
    WindowTooSmall(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree violation: {0}")]
    DegreeViolation(String),
}

impl Error {
    /// Resource-cap failures are distinguished from domain errors by callers
    /// that map errors to exit codes.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
