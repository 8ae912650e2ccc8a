use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not a unit in the coefficient ring")]
    NonUnitConstantTerm,
    #[error("series must have a zero constant term")]
    NonzeroConstantTerm,
    #[error("series must have a unit linear coefficient")]
    ZeroLinearTerm,
    #[error("coefficient {index} is not an integer")]
    NonIntegralResult { index: usize },
    #[error("entry ({n}, {k}) lies beyond truncation order {order}")]
    IndexBeyondTruncation { n: usize, k: usize, order: usize },
    #[error("entry ({n}, {k}) is not an integer")]
    NonIntegralEntry { n: usize, k: usize },
    #[error("entry ({n}, {k}) still depends on a symbol")]
    SymbolicEntries { n: usize, k: usize },
    #[error("cannot combine {left} and {right} Riordan arrays")]
    KindMismatch { left: &'static str, right: &'static str },
    #[error("operation not supported for {0} arrays")]
    UnsupportedKind(&'static str),
    #[error("invalid Riordan array: {0}")]
    InvalidArray(&'static str),
    #[error("row {row} has the wrong length for a lower-triangular matrix")]
    RaggedRow { row: usize },
    #[error("row {row} is not palindromic")]
    NotPalindromic { row: usize },
    #[error("malformed b-file line {0}")]
    MalformedLine(usize),
    #[error("b-file indices must increase strictly (line {0})")]
    NonIncreasingIndex(usize),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("network unavailable: {0}")]
    NetworkUnavailable(String),
    #[error("{0} is not in the cache")]
    CacheMiss(String),
    #[error("'{0}' is not an OEIS A-number")]
    InvalidANumber(String),
    #[error("no embedded fixture for {0}")]
    UnknownFixture(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
