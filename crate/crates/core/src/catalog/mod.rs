//! A uniform, enumerable catalog of every inequality and monotonicity /
//! convexity claim this library certifies.
//!
//! Each [`Case`] describes a sampling domain, an evaluation body (a pointwise
//! margin, a finite-difference claim, or a fixed grid), and a status
//! declaring how much confidence the catalog places in it:
//!
//! * [`Status::Asserted`] — the statement is expected to hold everywhere; any
//!   violation is a failure.
//! * [`Status::AssertedWithCorrection`] — same, but the encoded predicate
//!   repairs a defect in the source formula (a corrected constant, inner
//!   argument, or domain restriction); the original form, where instructive,
//!   appears as a separate `…-printed` empirical case.
//! * [`Status::Empirical`] — recorded and reported, never asserted.
//!
//! Margins follow one orientation everywhere: **positive means the inequality
//! holds** at the point.

mod cases;
mod combinators;

pub use combinators::{
    grunbaum_check, neuman_check, power_ratio_check, GrunbaumDirection, LogExpShape,
};

use crate::error::EvalError;
use crate::specfun::{self, artanh, digamma, trigamma};
use std::sync::OnceLock;

/// Bumped whenever the case list, a margin definition, or a sampling domain
/// changes; reports embed it so archived runs stay comparable.
pub const CATALOG_VERSION: &str = "1.0.0";

/// Confidence level attached to a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Asserted,
    AssertedWithCorrection,
    Empirical,
}

/// Whether the underlying inequality is strict in the interior of its domain.
/// Non-strict cases get a uniform `1e-12` numeric slack; strict cases get
/// zero slack except within `1e-6` of a declared equality frontier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Strict,
    NonStrict,
}

/// Direction asserted by a finite-difference claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    Increasing,
    Decreasing,
    Convex,
    Concave,
}

/// Why a sampled point was not evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipReason {
    /// A sub-expression leaves the statement's derivation domain (imaginary
    /// square root, argument outside a precondition, non-positive value under
    /// a logarithm, …).
    OutOfDerivationDomain,
    /// The inequality holds by sign inspection alone (negative < positive);
    /// logged separately rather than folded into the margin statistics.
    TrivialSign,
    /// An intermediate quantity exceeded floating-point range.
    Overflow,
}

/// Outcome of evaluating a margin at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointEval {
    Margin(f64),
    Skip(SkipReason),
}

/// One sampled coordinate: a half-open interval with a finite lower bound and
/// a possibly infinite upper bound. Sampling stays strictly inside.
#[derive(Clone, Copy, Debug)]
pub struct Dim {
    pub lo: f64,
    pub hi: f64,
}

/// Canonicalization applied to the sampled coordinates of each point, used to
/// encode ordering constraints (`x ≤ y`, `r ≥ s`) without rejection sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SortOrder {
    Ascending,
    Descending,
}

/// Pointwise margin evaluator; the slice holds the full point, fixed
/// parameters first, sampled coordinates after.
pub type MarginFn = Box<dyn Fn(&[f64]) -> PointEval + Send + Sync>;

/// Scalar target of a finite-difference claim; the last slice element is the
/// coordinate the difference quotient perturbs.
pub type TargetFn = Box<dyn Fn(&[f64]) -> Result<f64, EvalError> + Send + Sync>;

/// Evaluation body of a case.
pub enum Body {
    /// `margin(point) > 0 ⟺ the inequality holds at the point`.
    Inequality { margin: MarginFn },
    /// Sign of a central first or second difference of `target` in its last
    /// coordinate must match `kind`.
    Claim { kind: ClaimKind, target: TargetFn },
    /// Margin over an explicit finite point list; `dims` and `param_grid`
    /// are unused and the sampler evaluates (a prefix of) the list verbatim.
    FixedGrid { points: Vec<Vec<f64>>, margin: MarginFn },
}

/// One catalog entry.
pub struct Case {
    pub id: &'static str,
    pub status: Status,
    pub relation: Relation,
    /// Fixed parameter rows cycled round-robin over the sample index and
    /// prepended to each sampled point. Empty when the case has none.
    pub param_grid: Vec<Vec<f64>>,
    /// Sampled coordinates (appearing after the parameter block).
    pub dims: Vec<Dim>,
    pub sort: Option<SortOrder>,
    /// Distance from a full point to the nearest equality frontier; strict
    /// cases get `1e-12` slack when this is ≤ `1e-6`.
    pub frontier: Option<fn(&[f64]) -> f64>,
    pub body: Body,
}

impl Case {
    /// Number of coordinates in a full point (parameters + sampled dims, or
    /// the row width of a fixed grid).
    pub fn arity(&self) -> usize {
        match &self.body {
            Body::FixedGrid { points, .. } => points.first().map_or(0, Vec::len),
            _ => self.param_len() + self.dims.len(),
        }
    }

    pub fn param_len(&self) -> usize {
        self.param_grid.first().map_or(0, Vec::len)
    }
}

/// Constants computed once from the kernels (never hard-coded) and shared by
/// several cases.
#[derive(Clone, Copy, Debug)]
pub struct DerivedConstants {
    /// Positive root of the digamma function, c ≈ 1.4616.
    pub c: f64,
    /// ψ(3/2)²/ψ(2) ≈ 0.0031494.
    pub big_c: f64,
    /// Solution of ψ(eᵗ) = 1, t ≈ 1.1641.
    pub t: f64,
    /// 1/ψ(cosh 1) ≈ 13.1559.
    pub inv_psi_cosh1: f64,
    /// artanh(ψ(tanh c)) ≈ −0.9934, the value of artanh(ψ(tanh x)) at x = c.
    pub l: f64,
    /// −artanh(γ) ≈ −0.6582, the limit of artanh(ψ(tanh x)) as x → ∞.
    pub m: f64,
    /// ψ′(tanh c)·sech²c / (1 − ψ(tanh c)²) ≈ 0.8807, the derivative of
    /// artanh(ψ(tanh x)) at x = c, which bounds its slope everywhere beyond.
    pub a: f64,
}

/// Computes the shared constants on first use.
pub fn derived_constants() -> &'static DerivedConstants {
    static CELL: OnceLock<DerivedConstants> = OnceLock::new();
    CELL.get_or_init(|| {
        let c = specfun::psi_root();
        let t = specfun::psi_exp_one_root();
        let psi_15 = digamma(1.5).expect("1.5 is interior");
        let psi_2 = digamma(2.0).expect("2 is interior");
        let tc = c.tanh();
        let psi_tc = digamma(tc).expect("tanh c is interior");
        DerivedConstants {
            c,
            big_c: psi_15 * psi_15 / psi_2,
            t,
            inv_psi_cosh1: 1.0 / digamma(1.0_f64.cosh()).expect("cosh 1 is interior"),
            l: artanh(psi_tc).expect("|psi(tanh c)| < 1"),
            m: -artanh(specfun::EULER_GAMMA).expect("gamma < 1"),
            a: trigamma(tc).expect("tanh c is interior") * (1.0 - tc * tc)
                / (1.0 - psi_tc * psi_tc),
        }
    })
}

/// The fixed catalog, built on first use. Order is deterministic and part of
/// the report contract.
pub fn catalog() -> &'static [Case] {
    static CELL: OnceLock<Vec<Case>> = OnceLock::new();
    CELL.get_or_init(cases::build)
}

/// Ids of every case, in catalog order.
pub fn list_cases() -> Vec<&'static str> {
    catalog().iter().map(|c| c.id).collect()
}

/// Looks up one case by id.
pub fn find_case(id: &str) -> Option<&'static Case> {
    catalog().iter().find(|c| c.id == id)
}

/// Evaluates one case's margin at an explicit point (parameters first, then
/// coordinates, exactly the layout reported in `argmin`). Positive means the
/// inequality holds there. Finite-difference claims have no pointwise margin;
/// they and skipped points surface as `OutOfDomain`.
pub fn margin_at(id: &str, point: &[f64]) -> Result<f64, EvalError> {
    let case = find_case(id)
        .ok_or_else(|| EvalError::domain(f64::NAN, "an id present in list_cases()"))?;
    if point.len() != case.arity() {
        return Err(EvalError::domain(
            point.len() as f64,
            "point length equal to the case arity",
        ));
    }
    if point.iter().any(|v| !v.is_finite()) {
        return Err(EvalError::domain(f64::NAN, "finite point coordinates"));
    }
    let margin = match &case.body {
        Body::Inequality { margin } => {
            for (v, d) in point[case.param_len()..].iter().zip(&case.dims) {
                if !(d.lo <= *v && *v <= d.hi) {
                    return Err(EvalError::domain(*v, "coordinate within the case domain"));
                }
            }
            margin
        }
        Body::FixedGrid { margin, .. } => margin,
        Body::Claim { .. } => {
            return Err(EvalError::domain(
                f64::NAN,
                "a pointwise case (finite-difference claims have no pointwise margin)",
            ))
        }
    };
    match margin(point) {
        PointEval::Margin(v) => Ok(v),
        PointEval::Skip(SkipReason::Overflow) => Err(EvalError::overflow(point[0])),
        PointEval::Skip(_) => Err(EvalError::domain(
            point[0],
            "a point inside the statement's derivation domain",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_unique() {
        let ids = list_cases();
        assert!(ids.len() >= 24, "only {} cases", ids.len());
        assert!(ids.contains(&"lem21-4"));
        assert!(ids.contains(&"thm-r1-ineq3"));
        let mut sorted: Vec<_> = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate case id");
    }

    #[test]
    fn find_and_margin_surface_errors() {
        assert!(find_case("no-such-case").is_none());
        assert!(margin_at("no-such-case", &[1.0]).is_err());
        assert!(margin_at("lem21-1", &[1.0, 2.0]).is_err()); // wrong arity
        assert!(margin_at("lem21-1", &[f64::NAN]).is_err());
        assert!(margin_at("thm-r4-decreasing", &[2.0]).is_err()); // claim, no pointwise margin
    }

    #[test]
    fn derived_constants_match_low_precision_references() {
        let d = derived_constants();
        assert!((d.c - 1.4616).abs() < 1e-4);
        assert!((d.big_c - 0.0031494).abs() < 1e-6);
        assert!((d.t - 1.1641).abs() < 1e-4);
        assert!((d.inv_psi_cosh1 - 13.1559).abs() < 1e-3);
        assert!((d.l - (-0.9934)).abs() < 1e-4);
        assert!((d.m - (-0.6582)).abs() < 1e-4);
        assert!((d.a - 0.8807).abs() < 1e-4);
    }

    #[test]
    fn every_case_has_consistent_shape() {
        for case in catalog() {
            match &case.body {
                Body::FixedGrid { points, .. } => {
                    assert!(!points.is_empty(), "{}: empty grid", case.id);
                    let w = points[0].len();
                    assert!(points.iter().all(|p| p.len() == w), "{}: ragged grid", case.id);
                }
                Body::Claim { .. } => {
                    assert!(!case.dims.is_empty(), "{}: claim without a sampled dim", case.id);
                }
                Body::Inequality { .. } => {
                    assert!(!case.dims.is_empty(), "{}: inequality without dims", case.id);
                }
            }
            for d in &case.dims {
                assert!(d.lo.is_finite() && d.lo < d.hi, "{}: bad dim", case.id);
            }
            for row in &case.param_grid {
                assert_eq!(row.len(), case.param_len(), "{}: ragged params", case.id);
            }
        }
    }
}
