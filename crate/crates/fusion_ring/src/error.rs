use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("malformed ring data: {0}")]
    Shape(String),
    #[error("ring file: {0}")]
    Parse(String),
    #[error("no cyclotomic embedding found for basis element {index} (minimal polynomial {minpoly})")]
    NoEmbedding { index: usize, minpoly: String },
    #[error("exact dimensions are required but no embedding is attached")]
    MissingEmbedding,
    #[error("grading components do not multiply like a group: {0}")]
    NotAGroup(String),
    #[error("dimension data rejected: {0}")]
    BadDimensions(String),
}
