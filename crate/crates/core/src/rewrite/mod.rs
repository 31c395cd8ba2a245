//! Oriented relations: normal forms, ambiguity resolution, and dimension counts.

mod algebra;
mod confluence;
mod hilbert;
mod system;

pub use algebra::{MonomialOrder, PresentedAlgebra};
pub use confluence::{Ambiguity, AmbiguityKind, ConfluenceReport};
pub use hilbert::{estimate_gkdim, ideal_quotient_dims, ORACLE_WORD_LIMIT};
pub use system::{RewriteRule, RewriteSystem};

use crate::symbolic::SymbolicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("relations {first} and {second} share the leading word {lead}")]
    DuplicateLead { lead: String, first: usize, second: usize },
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("rewriting from {0} cycles with no consistent normal form")]
    Divergent(String),
    #[error("degree {degree} has {words} free words, above the limit of {limit}")]
    GuardExceeded { degree: u32, words: u128, limit: u128 },
    #[error("need at least {need} dimensions to estimate growth, got {got}")]
    TooFewEntries { got: usize, need: usize },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}
