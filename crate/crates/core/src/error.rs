use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical counterexamples found by the verification campaigns are not
/// errors; they are reported through
/// [`VerificationOutcome`](crate::restriction::VerificationOutcome).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("node outside diagram: ({row}, {col})")]
    NodeOutsideDiagram { row: usize, col: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("Δ² requires even size, got {0}")]
    OddSize(usize),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("lemma hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("not self-conjugate: {0}")]
    NotSelfConjugate(String),

    #[error("not an A_n class: {0}")]
    NotAlternatingClass(String),

    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    #[error("element not in group: {0}")]
    NotInGroup(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An exact computation produced a value that theory says cannot occur,
    /// e.g. a non-integral multiplicity. Always an arithmetic bug.
    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
