//! Error type shared by every evaluation routine.

/// Why an evaluation could not produce a finite value.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum EvalError {
    /// Argument at or below a pole: x ≤ 0 for the ψ family, a non-positive
    /// integer for the Γ family.
    #[error("PoleOrNonpositive: argument {arg} violates the precondition {requirement}")]
    PoleOrNonpositive { arg: f64, requirement: &'static str },
    /// Argument outside the function's stated domain.
    #[error("OutOfDomain: argument {arg} violates the precondition {requirement}")]
    OutOfDomain { arg: f64, requirement: &'static str },
    /// An intermediate or final value left the representable f64 range.
    #[error("Overflow: result magnitude exceeds the representable range at argument {arg}")]
    Overflow { arg: f64 },
    /// An iterative solver exhausted its budget (must not happen for the
    /// shipped brackets; kept so the failure mode is explicit, not a panic).
    #[error("NotConverged: iteration budget exhausted")]
    NotConverged,
}

impl EvalError {
    pub fn pole(arg: f64, requirement: &'static str) -> Self {
        EvalError::PoleOrNonpositive { arg, requirement }
    }

    pub fn domain(arg: f64, requirement: &'static str) -> Self {
        EvalError::OutOfDomain { arg, requirement }
    }

    pub fn overflow(arg: f64) -> Self {
        EvalError::Overflow { arg }
    }
}
