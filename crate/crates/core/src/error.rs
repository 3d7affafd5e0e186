use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidSpec(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge coloring is partial: edge ({0}, {1}) has no color")]
    PartialColoring(usize, usize),
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
