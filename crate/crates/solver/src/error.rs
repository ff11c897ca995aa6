//! Crate-wide error type.

/// Errors reported by the solver library.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A model or mesh parameter violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A function argument lies outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature stopped refining before reaching its target.
    #[error("quadrature accuracy not met: {0}")]
    AccuracyNotMet(String),

    /// A time grid cannot be constructed from the given parameters.
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    /// A grid's generating law is inconsistent with the Hurst index.
    #[error("grid law mismatch: {0}")]
    LawMismatch(String),

    /// A field value is non-finite or violates the boundary invariant.
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// The conjugate-gradient solve did not converge. For the SPD systems
    /// assembled here this indicates an assembly bug, not a data problem.
    #[error("linear solver did not converge: {0}")]
    SolverDiverged(String),

    /// A field with zero total mass cannot be normalized.
    #[error("field has zero mass")]
    ZeroMass,

    /// A field has genuinely negative entries (beyond rounding noise),
    /// signalling a scheme violation.
    #[error("field has negative entries (min {0:e})")]
    NegativeMass(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
