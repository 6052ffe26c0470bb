use thiserror::Error;

/// Errors raised by the library. Property failures (an identity that does
/// not hold, a scan counterexample) are reported as values, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("vertex {0} is isolated; the normalized Laplacian is undefined")]
    IsolatedVertex(usize),
    #[error("graph is not biregular")]
    NotBiregular,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("adjacency characteristic polynomial is not even after removing x^{0}")]
    InternalParityError(usize),
    #[error("prerequisite failed: {0}")]
    PrereqFailed(String),
    #[error("n = {n} exceeds the scan cap of {cap} vertices")]
    CapExceeded { n: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
