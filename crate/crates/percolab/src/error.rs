use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid graph parameters (overflow, n < 2, ...).
    #[error("invalid shape: {0}")]
    Shape(String),
    /// Coordinate or index outside the vertex set.
    #[error("out of range: {0}")]
    Range(String),
    /// A formula or solver was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Bad or missing user-supplied parameter.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// Operation not defined for this shape or regime.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An exact computation would exceed its enumeration budget.
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    /// Malformed input file.
    #[error("parse error: {0}")]
    Parse(String),
    /// I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 validation, 3 resource budget, 1 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
