use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("pair {pair}: {msg}")]
    Containment { pair: usize, msg: String },

    #[error("invalid interval [{a}, {b}]: start exceeds end")]
    InvalidInterval { a: i64, b: i64 },

    #[error("invalid modification set: index {index} out of range 1..={n}")]
    InvalidModification { index: usize, n: usize },

    #[error("{0}")]
    InvalidInstance(String),
}
