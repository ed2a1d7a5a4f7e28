//! Formal C-circuits, labelled cells, cobordism expressions and simplicial formal C-maps.

mod cell;
mod circuit;
mod expression;
mod simplicial;

use thiserror::Error;

pub use cell::{
    compose_h, compose_v, horizontal_by_whiskering, pants_semidirect_reduction, whisker_left,
    whisker_right, whiskering_steps, LabeledCell, WhiskerOrder,
};
pub use circuit::{
    circuit_normalize, reverse_orientation, rotate_basepoint, FormalBoundary, FormalCircuit,
};
pub use expression::{typecheck, CobordismExpression, ElementaryPiece, PieceKind};
pub use simplicial::{
    annulus_falling, annulus_flatten, annulus_rising, combine_triangles, validate_simplicial,
    Combination, CombineMode, SimplicialComplex, SimplicialFormalMap,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormalError {
    #[error("a formal circuit needs at least one label")]
    EmptyCircuit,
    #[error("{what} index {index} is out of range")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("cells do not compose vertically: expected source {expected}, found {found}")]
    BoundaryMismatch { expected: String, found: String },
    #[error("triangles {0} and {1} do not share an edge")]
    NotAdjacent(usize, usize),
    #[error("unsupported configuration: {0}")]
    UnsupportedTriangulation(String),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("expressions do not glue: {0}")]
    GlueMismatch(String),
}
