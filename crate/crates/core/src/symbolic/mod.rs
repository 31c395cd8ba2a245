//! Exact free-algebra arithmetic: scalars, words and noncommutative polynomials.

mod poly;
mod scalar;
mod word;

pub use poly::{word_scale, Homogeneity, NCPolynomial};
pub use scalar::{Scalar, ScalarParseError};
pub use word::{GeneratorSet, Word, WordDisplay, MAX_GENERATORS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    #[error("a generator set needs at least one generator")]
    NoGenerators,
    #[error("too many generators ({0}); the limit is {MAX_GENERATORS}")]
    TooManyGenerators(usize),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("`{0}` is not a valid generator name")]
    BadName(String),
    #[error("generator `{0}` has degree 0")]
    ZeroDegree(String),
    #[error("{names} generators but {degrees} degrees")]
    DegreeCount { names: usize, degrees: usize },
    #[error("letter index {0} is out of range")]
    LetterOutOfRange(usize),
    #[error("operands live over different generator sets")]
    GeneratorMismatch,
    #[error("expected {expected} scales, got {got}")]
    ScaleCount { expected: usize, got: usize },
    #[error("scale for generator {0} is zero")]
    ZeroScale(usize),
}
