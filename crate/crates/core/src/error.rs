use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("incompatible matrices: {0}")]
    IncompatibleMatrices(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("invalid minor specification: {0}")]
    InvalidMinorSpec(String),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("degenerate code: {0}")]
    DegenerateCode(String),
    #[error("no repair set: {0}")]
    NoLocality(String),
    #[error("theorem not applicable: {0}")]
    InapplicableTheorem(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
