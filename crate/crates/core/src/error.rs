use thiserror::Error;

use crate::complex::{VertexId, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(VertexId),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),

    #[error("invalid vertex id `{0}`: ids must be non-empty and contain no ','")]
    InvalidVertexId(String),

    #[error("edge {0}-{0} is a loop")]
    Loop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("edge {0}-{1} is listed in both orientations with inconsistent {2}")]
    SkewSymmetry(VertexId, VertexId, &'static str),

    #[error("face ({0}) repeats a vertex")]
    DegenerateFace(String),

    #[error("duplicate face ({0})")]
    DuplicateFace(String),

    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(String, String),

    #[error("({0}) is not a face of the complex")]
    NotAFace(String),

    #[error("the complex is disconnected")]
    Disconnected,

    #[error("invalid triangulation: {}", fmt_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("{what} has length {found}, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid cochain key `{0}`")]
    InvalidCochainKey(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("derived size of sphere S_{level} is {size}; it must be at least 1")]
    SphereSize { level: usize, size: i64 },

    #[error("{cells} cells exceed the dense eigensolver cap of {cap}; use a smaller truncation")]
    CellCapExceeded { cells: usize, cap: usize },

    #[error("operator is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid cut-off family: {0}")]
    InvalidCutoffFamily(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
