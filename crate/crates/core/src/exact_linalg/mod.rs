//! Exact linear algebra over rationals and prime fields.

pub mod graded;
pub mod matrix;
pub mod scalar;

pub use graded::{GradedError, GradedSpace, TensorSpace};
pub use matrix::{dual_basis, solve, LinalgError, Matrix, SpanBasis};
pub use scalar::{is_prime, FieldKind, Fp, Scalar, ScalarParseError};
