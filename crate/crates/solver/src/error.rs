use ivx_core::{CoreError, Mode};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("{problem} requires {} mode", expected.as_str())]
    ModeMismatch {
        expected: Mode,
        problem: &'static str,
    },

    #[error("{0} requires shortest-path endpoints (s and t)")]
    MissingEndpoints(&'static str),

    #[error("exact-solver limits exceeded: {0}")]
    LimitExceeded(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}
