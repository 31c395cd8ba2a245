//! The candidate twisted calculus: coefficient transport, wedge products,
//! the differential, partial derivatives and the volume-form maps.
//!
//! Forms are kept as right-module combinations `Σ dx_S * a_S` over sorted
//! subsets; left coefficients are moved right with `a * dx_i = dx_i * ν_i(a)`.

mod calculus;
mod form;
mod twist;

pub use calculus::{validate_twist, Calculus, TwistFailure};
pub use form::{DifferentialForm, Subset, MAX_FORM_GENERATORS};
pub use twist::{derive_wedge_coefficients, CalculusSpec, DiagonalTwist, WedgeCoefficients};

use crate::rewrite::RewriteError;
use crate::symbolic::SymbolicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("{what}: expected {expected}, got {got}")]
    DimensionMismatch { what: String, expected: usize, got: usize },
    #[error("{what} entry ({row}, {col}) is zero")]
    ZeroEntry { what: String, row: usize, col: usize },
    #[error("forms support at most {max} generators, got {0}", max = MAX_FORM_GENERATORS)]
    TooManyGenerators(usize),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("expected a form of grade {expected}, got grade {got}")]
    WrongGrade { expected: usize, got: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}
