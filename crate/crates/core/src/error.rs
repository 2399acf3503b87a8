use thiserror::Error;

use crate::grassmann::{AlgebraConfig, Parity};

/// Errors raised by algebra, matrix and identity operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra configuration mismatch: {left} vs {right}")]
    ConfigMismatch { left: AlgebraConfig, right: AlgebraConfig },

    #[error("invalid algebra configuration: {0}")]
    InvalidConfig(String),

    #[error("generator index {index} is not valid under {config}")]
    GeneratorOutOfRange { index: u32, config: AlgebraConfig },

    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("unsupported matrix size {n}: {reason}")]
    UnsupportedSize { n: usize, reason: &'static str },

    #[error("{what} must be {expected}, found {found}")]
    Parity {
        what: &'static str,
        expected: Parity,
        found: Parity,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
