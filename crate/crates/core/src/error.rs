use thiserror::Error;

use crate::rules::RuleApplication;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid cotree: {0}")]
    InvalidCotree(String),

    #[error("graph is not a cograph, induced P4 {0:?}")]
    NotCograph([usize; 4]),

    #[error("empty graph")]
    EmptyGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid nested t-module: {0}")]
    InvalidNestedModule(String),

    #[error("path cover does not cover edge ({child}, {parent})")]
    NotCovering { child: usize, parent: usize },

    #[error("path is not descending in the host forest: {0}")]
    NotDescending(String),

    #[error("extraction failed: {0}")]
    Extraction(String),

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("iteration cap of {cap} rule applications exceeded")]
    IterationCap { cap: usize, trace: Vec<RuleApplication> },

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("counterexample size must be a power of two >= 2, got {0}")]
    NotPowerOfTwo(usize),
}
