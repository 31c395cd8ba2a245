//! Twisted differential calculi over finitely presented graded algebras.
//!
//! The crate builds a candidate calculus from a presentation plus a diagonal
//! twist, and checks the smoothness conditions degree by degree in exact
//! rational arithmetic.

pub mod symbolic;
pub mod linalg;
pub mod rewrite;
pub mod forms;
pub mod verify;
pub mod zoo;
pub mod front;
