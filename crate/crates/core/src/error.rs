use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not a {k}-tree")]
    NotKTree { k: usize },

    #[error("graph is not a tree")]
    NotTree,

    #[error("decomposition width {width} exceeds the guard of {limit}")]
    WidthGuard { width: usize, limit: usize },

    #[error("instance too large for brute force: {n} vertices (limit {limit})")]
    SizeGuard { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
