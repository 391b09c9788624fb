use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("S({n},{k}) has more than {budget} vertices")]
    Capacity { n: usize, k: usize, budget: usize },

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("unknown code kind `{0}`")]
    UnknownKind(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("brute force is limited to {limit} vertices, graph has {vertices}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
