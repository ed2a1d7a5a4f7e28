//! Finite crossed modules, crossed C-algebras and a formal 1+1-dimensional
//! HQFT evaluator, all over exact scalar fields.

pub mod cli;
pub mod crossed_algebras;
pub mod crossed_modules;
pub mod exact_linalg;
pub mod fixtures;
pub mod formal_maps;
pub mod formats;
pub mod groups;
pub mod hqft;
pub mod report;
pub mod workspace;

pub use exact_linalg::{FieldKind, Fp, Matrix, Scalar};
pub use report::Report;

/// Arbitrary-precision rationals, the default field.
pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
