use thiserror::Error;

/// Errors shared across the crate. Every fallible operation states which of
/// these it can actually produce.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for dimension {dim} (indices are 1-based)")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{op} is undefined for the zero ideal")]
    ZeroIdeal { op: &'static str },

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("cannot shrink ambient dimension from {from} to {to}")]
    ShrinkDimension { from: usize, to: usize },

    #[error("generator {gen} is not square-free")]
    NotSquareFree { gen: String },

    #[error("hypothesis violated in {construction}: {detail}")]
    Hypothesis {
        construction: &'static str,
        detail: String,
    },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("cone is not pointed")]
    NotPointed,

    #[error("cone has rank {rank} in ambient dimension {dim}; Hilbert bases are only computed for full-dimensional cones")]
    RankDeficient { rank: usize, dim: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("edge endpoints must differ, got loop at `{0}`")]
    LoopEdge(String),

    #[error("graph with {vertices} vertices exceeds the supported limit of {limit} for this operation")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
