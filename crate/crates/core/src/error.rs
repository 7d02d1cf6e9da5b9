//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed row {row}: {detail}")]
    MalformedRow { row: usize, detail: String },

    #[error("hierarchy contradiction: {unit} appears under {a} (row {row_a}) and {b} (row {row_b})")]
    HierarchyContradiction {
        unit: String,
        a: String,
        row_a: usize,
        b: String,
        row_b: usize,
    },

    #[error("invalid value: {0}")]
    Invalid(String),

    #[error("shape mismatch: {op} got {lhs} and {rhs}")]
    ShapeMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("non-finite gradient on parameter {0}")]
    NonFiniteGradient(String),

    #[error("checkpoint version mismatch: file has {found}, expected {expected}")]
    CheckpointVersion { found: u32, expected: u32 },

    #[error("checkpoint corrupted at byte offset {offset}: {detail}")]
    CheckpointCorrupt { offset: u64, detail: String },

    #[error("{0}")]
    Config(String),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
