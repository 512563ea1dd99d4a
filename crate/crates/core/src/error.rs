use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid set kind: {0}")]
    InvalidKind(String),

    #[error("graph has {n} vertices, above the solver cap of {cap} (use force to override)")]
    TooLarge { n: usize, cap: usize },

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid X3C instance: {0}")]
    InvalidInstance(String),

    #[error("not an exact cover: {0}")]
    NotExactCover(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
