use thiserror::Error;

/// Errors raised by the invariant and obstruction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic after normalization")]
    NonMonic,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("inconsistent metadata: {0}")]
    InconsistentMetadata(String),
    #[error("not a knot: {0}")]
    NotAKnot(String),
    #[error("requested angle is a jump point of the signature function")]
    JumpPoint,
    #[error("no circle roots: {0}")]
    NoCircleRoots(String),
    #[error("matrix is not unimodular")]
    NonUnimodular,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degenerate Seifert form: {0}")]
    Degenerate(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
