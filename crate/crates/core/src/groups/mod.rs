//! Finite groups, homomorphisms, actions, quotients, sections and 2-cocycles.

mod aut;
mod group;
mod hom;
pub mod perm;
mod quotient;

use thiserror::Error;

use crate::report::Report;

pub use aut::{
    automorphism_group, automorphism_group_bounded, AutomorphismGroup, DEFAULT_AUT_BOUND,
};
pub use group::{Elem, FiniteGroup};
pub use hom::{
    check_action, check_homomorphism, conjugation_action, conjugation_on_subgroup, GroupAction,
    GroupHomomorphism,
};
pub use quotient::{cocycle_from_section, quotient_group, Section, TwoCocycle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("multiplication table must be {order}x{order}")]
    TableShape { order: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("index 0 is not a two-sided identity (fails at element {element})")]
    NoIdentityAtZero { element: usize },
    #[error("table is not a Latin square ({line} repeats an entry)")]
    NotLatinSquare { line: String },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("map has {found} entries, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("map value {0} is out of range")]
    MapValueOutOfRange(usize),
    #[error("action table must be {actor}x{space}")]
    ActionShape { actor: usize, space: usize },
    #[error("not a homomorphism: {}", .0.summary())]
    NotHomomorphism(Box<Report>),
    #[error("not a group action: {}", .0.summary())]
    NotAction(Box<Report>),
    #[error("maps do not compose")]
    CompositionMismatch,
    #[error("index set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("section does not send the identity to the identity")]
    SectionNotNormalized,
    #[error("q(s(g)) ≠ g at g = {element}")]
    NotASection { element: usize },
    #[error("cocycle identity violated: {}", .0.summary())]
    CocycleIdentityViolated(Box<Report>),
    #[error("group order {order} exceeds the automorphism search bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
}
