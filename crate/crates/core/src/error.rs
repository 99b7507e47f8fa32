use thiserror::Error;

/// Errors raised by the matrix and region routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("non-finite value at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("unknown gallery matrix `{0}`")]
    UnknownMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
