use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input bytes (JSON, XML, CSV). Carries enough location
    /// information to find the offending line or feature.
    #[error("parse error: {0}")]
    Parse(String),

    /// A caller passed an argument that violates an operation's contract
    /// (unknown node id, equal merge endpoints, stale report, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input data is well-formed but semantically unusable for the
    /// requested operation (single-driver split, empty index, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// An exact algorithm refused an instance above its size bound.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable process exit code for the CLI: 2 parse, 3 validation, 4 size guard.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) => 2,
            Error::InvalidArgument(_) | Error::Validation(_) => 3,
            Error::SizeGuard(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
