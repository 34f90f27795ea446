use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point set is not full-dimensional (affine rank {rank} < {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("polytope is not Fano")]
    NotFano,

    #[error("origin is not an interior point")]
    OriginNotInterior,

    #[error("origin lies on the facet hyperplane")]
    OriginOnFacet,

    #[error("configurations are not of harmony")]
    NotHarmony,

    #[error("divisibility order on block {block} gives a non-squarefree initial ideal")]
    NotSquarefreeInput { block: &'static str },

    #[error("initial ideal is not squarefree")]
    NotSquarefree,

    #[error("input too large for exhaustive mode: {what} = {value} exceeds {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("compressedness cross-check mismatch: facet widths say {facet_widths}, order enumeration says {enumeration}")]
    CrossCheckMismatch { facet_widths: bool, enumeration: bool },

    #[error("degree {degree} exceeds the fiber bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },

    #[error("vertex {vertex} out of range 1..={d}")]
    VertexOutOfRange { vertex: usize, d: usize },

    #[error("duplicate column {0}")]
    DuplicateColumn(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
