use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generator {index} is singular (zero determinant)")]
    InvalidGenerator { index: usize },

    #[error("closure exceeded {cap} elements; the group is probably infinite")]
    NotFiniteWithinCap { cap: usize },

    #[error("empty generator list and no dimension given")]
    Underspecified,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("polynomial is not invariant: moved by A{}", .witness + 1)]
    NotInvariant { witness: usize },

    #[error("quotient is not an invariant function: moved by A{}", .witness + 1)]
    NotInvariantFunction { witness: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
