use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand dimensions do not fit together.
    #[error("shape error: {0}")]
    Shape(String),
    /// A dimension product exceeded the configured cap.
    #[error("size error: {0}")]
    Size(String),
    /// An input violated a precondition (Hermiticity, normalization, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The brute-force oracle was asked for more qubits than it allows.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
