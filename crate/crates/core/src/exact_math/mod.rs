//! Exact rational scalars, dense matrices and integer-lattice normal forms.
//!
//! Every quantity in the crate is a [`Rational`] (an arbitrary-precision,
//! always-reduced fraction) or an [`Integer`]. Nothing here rounds.

mod hnf;
mod matrix;
mod rational;

pub use hnf::{hermite_normal_form, is_hermite_normal_form};
pub use matrix::{
    determinant, integer_rows, inverse, nullspace, rank, solve_linear_system, IntMatrix, Matrix,
    RatMatrix,
};
pub use rational::{
    dot, format_rational, int_vector_to_rat, is_integral, is_integral_vector, lcm_of_denominators,
    parse_rational, primitive_integer_vector, rat, IntVector, Integer, RatVector, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero vector has no primitive integer multiple")]
    ZeroVector,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
