//! Special functions (Γ, ln Γ, ψ, ψ′, ψ″, n-ball volumes) and a deterministic
//! numerical certification engine for a fixed catalog of inequality and
//! shape (monotonicity/convexity) claims about them.
//!
//! Layout:
//! - [`specfun`] — the evaluation kernels and constants;
//! - [`bounds`] — the five elementary ψ bounds as named margins;
//! - [`ballvol`] — unit-ball volumes two independently computable ways and the
//!   ball inequalities;
//! - [`catalog`] — every certified claim as an enumerable case, plus the three
//!   generic inequality combinators;
//! - [`verifier`] — seeded deterministic sampling, margin statistics, and
//!   finite-difference shape checks.

pub mod ballvol;
pub mod bounds;
pub mod catalog;
pub mod error;
pub mod specfun;
pub mod verifier;

pub use error::EvalError;
