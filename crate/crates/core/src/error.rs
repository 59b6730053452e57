use thiserror::Error;

use crate::algebra::BasisTag;

#[derive(Debug, Error)]
pub enum QsymError {
    #[error("cannot parse composition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: BasisTag },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("weight {weight} exceeds the configured cap {cap}")]
    BoundExceeded { weight: usize, cap: usize },

    #[error("basis matrix of weight {0} is singular")]
    SingularMatrix(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = QsymError> = std::result::Result<T, E>;
