//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division of scalars by zero.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation required a zeroless operand (one whose value set excludes 0).
    #[error("operand is not zeroless: {0}")]
    NotZeroless(String),

    /// Exact arithmetic exceeded the configured size budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("size cap exceeded: n = {n}, cap = {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("index out of range: {0}")]
    BadIndex(String),

    #[error("tolerance neutrix must be contained in o (the infinitesimals), got {0}")]
    BadTolerance(String),

    #[error("precondition not met: {0}")]
    ConditionUnmet(String),

    #[error("matrix is not triangular")]
    NotTriangular,

    #[error("matrix is not reduced")]
    NotReduced,

    /// A relation the calculus guarantees failed on a concrete instance.
    /// Reaching this is a bug (or a counterexample worth reporting).
    #[error("law violated: {0}")]
    LawViolation(String),

    #[error("parse error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
