//! Deterministic sampling and margin-evaluation engine.
//!
//! [`run_case`] draws a seeded, case-keyed point set over the case's declared
//! domain, evaluates the margin (or a central difference quotient for shape
//! claims) at every point, and aggregates counts, the minimum margin with its
//! argmin, and the first violations. The result is a pure function of
//! `(catalog version, SampleConfig)`:
//!
//! * the RNG stream is keyed by `(seed, case id)` (see [`rng`]), so cases
//!   never share or perturb each other's draws;
//! * evaluation order is the sample order regardless of `threads`; worker
//!   chunks are merged in index order, so thread count never changes any
//!   reported bit;
//! * all reductions (min with first-index tie-break, violation list capped at
//!   the first 100) are order-deterministic.

mod rng;

use crate::catalog::{
    self, Body, Case, ClaimKind, Dim, PointEval, Relation, SkipReason, SortOrder, Status,
};
use crate::error::EvalError;
use rng::CaseRng;
use std::fmt;

/// How sample points are placed inside a case's domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Independent uniform draws per coordinate (default).
    Random,
    /// Deterministic rank-1 lattice (golden/plastic ratios), RNG-free.
    Grid,
    /// Like `Random`, but each coordinate is squashed into the outermost
    /// `1e-4` of its span near the lower bound with probability
    /// `boundary_fraction`, to stress equality frontiers.
    BoundaryBiased,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::Grid => "grid",
            Strategy::BoundaryBiased => "boundary-biased",
        }
    }
}

/// Sampling and evaluation parameters. `Default` gives the reference
/// configuration used by the command-line checker.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub seed: u64,
    pub n_samples: usize,
    pub strategy: Strategy,
    /// Probability that a coordinate is forced into the near-boundary band
    /// (only under [`Strategy::BoundaryBiased`]).
    pub boundary_fraction: f64,
    /// Relative step for difference quotients: `h = fd_step · max(1, |x|)`,
    /// shrunk near domain endpoints.
    pub fd_step: f64,
    /// Worker threads for evaluation. Affects wall time only, never results.
    pub threads: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 42,
            n_samples: 100_000,
            strategy: Strategy::Random,
            boundary_fraction: 0.2,
            fd_step: 1e-5,
            threads: 1,
        }
    }
}

/// Verdict for one case run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    /// No violations in an asserted case.
    Pass,
    /// At least one violation in an asserted case.
    Fail,
    /// No violations in an exploratory case.
    EmpiricalPass,
    /// Violations in an exploratory case; never affects the exit code.
    EmpiricalFail,
    /// Nothing was evaluated (every point skipped, or zero samples).
    Undetermined,
}

impl RunStatus {
    pub fn label(self) -> &'static str {
        match self {
            RunStatus::Pass => "pass",
            RunStatus::Fail => "fail",
            RunStatus::EmpiricalPass => "empirical-pass",
            RunStatus::EmpiricalFail => "empirical-fail",
            RunStatus::Undetermined => "undetermined",
        }
    }
}

/// One recorded violation: the sample index, the full point, and the margin.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub index: usize,
    pub point: Vec<f64>,
    pub margin: f64,
}

/// Aggregated outcome of one case run.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub id: String,
    pub status: RunStatus,
    pub n_evaluated: usize,
    pub n_skipped_domain: usize,
    pub n_skipped_trivial: usize,
    pub n_skipped_overflow: usize,
    /// Total violations found (not capped; `violations` holds the first 100).
    pub n_violations: usize,
    pub min_margin: Option<f64>,
    pub argmin: Option<Vec<f64>>,
    pub violations: Vec<Violation>,
}

impl CheckResult {
    pub fn n_skipped(&self) -> usize {
        self.n_skipped_domain + self.n_skipped_trivial + self.n_skipped_overflow
    }
}

/// Requested case id is not in the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCase(pub String);

impl fmt::Display for UnknownCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown case id {:?}; see the case listing", self.0)
    }
}

impl std::error::Error for UnknownCase {}

/// Clamp for uniforms so mapped coordinates stay strictly inside open
/// domains.
const U_CLAMP: f64 = 1e-12;
/// Span assumed for the near-boundary band of an unbounded coordinate.
const UNBOUNDED_NEAR_SPAN: f64 = 20.0;
/// Fraction of the span forming the boundary band under `BoundaryBiased`.
const BOUNDARY_BAND: f64 = 1e-4;
/// Violation cap for the recorded (not counted) list.
const MAX_RECORDED_VIOLATIONS: usize = 100;
/// Uniform slack for non-strict relations and near-frontier strict ones.
const BASE_SLACK: f64 = 1e-12;
/// Frontier distance below which a strict case receives `BASE_SLACK`.
const FRONTIER_BAND: f64 = 1e-6;

/// Maps a clamped uniform into a dimension. Bounded dims map affinely; for
/// unbounded dims the first half of the uniform mass covers `[lo, lo+10]`
/// and the second half fans out via a half-Cauchy tail (reaching ~`lo+3e12`
/// at the clamp), so moderate arguments dominate but far-field points occur.
fn map_to_dim(u: f64, dim: &Dim) -> f64 {
    let u = u.clamp(U_CLAMP, 1.0 - U_CLAMP);
    if dim.hi.is_finite() {
        dim.lo + u * (dim.hi - dim.lo)
    } else if u < 0.5 {
        dim.lo + UNBOUNDED_NEAR_SPAN * u
    } else {
        let v = (u - 0.5) / 0.5;
        dim.lo + 10.0 + 10.0 * (std::f64::consts::FRAC_PI_2 * v).tan()
    }
}

/// Draws the full flat point set for a case (stride = `case.arity()`).
/// `FixedGrid` cases return a prefix of their declared list instead.
fn sample_points(case: &Case, config: &SampleConfig) -> Vec<f64> {
    if let Body::FixedGrid { points, .. } = &case.body {
        return points
            .iter()
            .take(config.n_samples)
            .flat_map(|row| row.iter().copied())
            .collect();
    }

    let n = config.n_samples;
    let d = case.dims.len();
    let pl = case.param_len();
    let mut out = Vec::with_capacity(n * (pl + d));

    // Rank-1 lattice generator: alpha_j = g^-(j+1) with g^(d+1) = g + 1.
    let lattice_alphas: Vec<f64> = if config.strategy == Strategy::Grid {
        let mut g = 1.0f64;
        for _ in 0..32 {
            g = (1.0 + g).powf(1.0 / (d as f64 + 1.0));
        }
        (1..=d).map(|j| g.powi(-(j as i32))).collect()
    } else {
        Vec::new()
    };

    let mut rng = CaseRng::new(config.seed, case.id);
    for i in 0..n {
        if pl > 0 {
            out.extend_from_slice(&case.param_grid[i % case.param_grid.len()]);
        }
        let start = out.len();
        for (j, dim) in case.dims.iter().enumerate() {
            let u = match config.strategy {
                Strategy::Random => rng.next_f64(),
                Strategy::Grid => ((i as f64 + 0.5) * lattice_alphas[j]).fract(),
                Strategy::BoundaryBiased => {
                    // Two draws per coordinate in both branches keeps the
                    // stream aligned regardless of the bias outcome.
                    let w = rng.next_f64();
                    let u = rng.next_f64();
                    if w < config.boundary_fraction {
                        u * BOUNDARY_BAND
                    } else {
                        u
                    }
                }
            };
            out.push(map_to_dim(u, dim));
        }
        if let Some(order) = case.sort {
            let dims_slice = &mut out[start..];
            dims_slice.sort_unstable_by(|a, b| a.partial_cmp(b).expect("sampled coordinates are never NaN"));
            if order == SortOrder::Descending {
                dims_slice.reverse();
            }
        }
    }
    out
}

/// Evaluation of one point: either a usable margin with its violation slack,
/// or a categorized skip.
enum Evaluated {
    Value { margin: f64, slack: f64 },
    Skipped(SkipReason),
}

/// Slack for a direct (non-difference) margin: non-strict relations tolerate
/// `BASE_SLACK` everywhere; strict ones only within `FRONTIER_BAND` of a
/// declared equality frontier.
fn inequality_slack(case: &Case, point: &[f64]) -> f64 {
    match case.relation {
        Relation::NonStrict => BASE_SLACK,
        Relation::Strict => match case.frontier {
            Some(distance) if distance(point) <= FRONTIER_BAND => BASE_SLACK,
            _ => 0.0,
        },
    }
}

/// Finalizes a raw margin: NaN carries no order information and becomes a
/// domain skip; infinities clamp to `±f64::MAX` so aggregation stays finite.
fn finalize(margin: f64, slack: f64) -> Evaluated {
    if margin.is_nan() {
        Evaluated::Skipped(SkipReason::OutOfDerivationDomain)
    } else {
        Evaluated::Value {
            margin: margin.clamp(f64::MIN, f64::MAX),
            slack,
        }
    }
}

fn skip_for_error(err: &EvalError) -> SkipReason {
    if matches!(err, EvalError::Overflow { .. }) {
        SkipReason::Overflow
    } else {
        SkipReason::OutOfDerivationDomain
    }
}

/// Central difference quotient for a shape claim at `point` (the perturbed
/// coordinate is the last one). Returns the signed margin — positive iff the
/// quotient agrees with the claimed shape beyond the roundoff floor — and the
/// matching slack.
///
/// Margins whose magnitude is at or below the slack are recorded as exactly
/// `0.0`: below that floor the quotient's sign is rounding jitter, not
/// signal (visible where a target goes numerically flat, e.g. once `tanh x`
/// rounds to `1.0`). The clamp cannot flip a verdict — any clamped value was
/// already inside the non-violation band — it only keeps the reported
/// minimum margin meaningful.
fn fd_margin(case: &Case, kind: ClaimKind, target: &catalog::TargetFn, point: &[f64], fd_step: f64) -> Evaluated {
    debug_assert_eq!(case.dims.len(), 1, "shape claims perturb exactly one coordinate");
    let x_idx = point.len() - 1;
    let x = point[x_idx];
    let dim = &case.dims[case.dims.len() - 1];

    let mut h = fd_step * x.abs().max(1.0);
    h = h.min(0.45 * (x - dim.lo));
    if dim.hi.is_finite() {
        h = h.min(0.45 * (dim.hi - x));
    }
    if !(h > 0.0) {
        return Evaluated::Skipped(SkipReason::OutOfDerivationDomain);
    }

    let mut probe_point = point.to_vec();
    let mut probe = |xv: f64| -> Result<f64, SkipReason> {
        probe_point[x_idx] = xv;
        match target(&probe_point) {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(v) if v.is_infinite() => Err(SkipReason::Overflow),
            Ok(_) => Err(SkipReason::OutOfDerivationDomain),
            Err(e) => Err(skip_for_error(&e)),
        }
    };

    let f0 = match probe(x) {
        Ok(v) => v,
        Err(r) => return Evaluated::Skipped(r),
    };
    let fm = match probe(x - h) {
        Ok(v) => v,
        Err(r) => return Evaluated::Skipped(r),
    };
    let fp = match probe(x + h) {
        Ok(v) => v,
        Err(r) => return Evaluated::Skipped(r),
    };

    let scale = f0.abs().max(1.0);
    let (raw, slack) = match kind {
        ClaimKind::Increasing => ((fp - fm) / (2.0 * h), 1e-9 * scale / h),
        ClaimKind::Decreasing => ((fm - fp) / (2.0 * h), 1e-9 * scale / h),
        ClaimKind::Convex => (
            (fp - 2.0 * f0 + fm) / (h * h),
            100.0 * f64::EPSILON * scale / (h * h),
        ),
        ClaimKind::Concave => (
            -((fp - 2.0 * f0 + fm) / (h * h)),
            100.0 * f64::EPSILON * scale / (h * h),
        ),
    };
    let margin = if raw.abs() <= slack { 0.0 } else { raw };
    finalize(margin, slack)
}

fn eval_point(case: &Case, point: &[f64], fd_step: f64) -> Evaluated {
    match &case.body {
        Body::Inequality { margin } | Body::FixedGrid { margin, .. } => match margin(point) {
            PointEval::Margin(m) => finalize(m, inequality_slack(case, point)),
            PointEval::Skip(reason) => Evaluated::Skipped(reason),
        },
        Body::Claim { kind, target } => fd_margin(case, *kind, target, point, fd_step),
    }
}

/// Per-chunk aggregation, merged strictly in chunk (= sample) order.
#[derive(Default)]
struct ChunkAcc {
    n_evaluated: usize,
    n_skipped_domain: usize,
    n_skipped_trivial: usize,
    n_skipped_overflow: usize,
    n_violations: usize,
    /// (margin, global index, point); index kept for first-wins merging.
    min: Option<(f64, usize, Vec<f64>)>,
    violations: Vec<Violation>,
}

impl ChunkAcc {
    fn absorb_point(&mut self, case: &Case, index: usize, point: &[f64], fd_step: f64) {
        match eval_point(case, point, fd_step) {
            Evaluated::Skipped(SkipReason::OutOfDerivationDomain) => self.n_skipped_domain += 1,
            Evaluated::Skipped(SkipReason::TrivialSign) => self.n_skipped_trivial += 1,
            Evaluated::Skipped(SkipReason::Overflow) => self.n_skipped_overflow += 1,
            Evaluated::Value { margin, slack } => {
                self.n_evaluated += 1;
                let is_new_min = match &self.min {
                    Some((best, _, _)) => margin < *best,
                    None => true,
                };
                if is_new_min {
                    self.min = Some((margin, index, point.to_vec()));
                }
                if margin < -slack {
                    self.n_violations += 1;
                    if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                        self.violations.push(Violation {
                            index,
                            point: point.to_vec(),
                            margin,
                        });
                    }
                }
            }
        }
    }

    /// Merges `later` (covering strictly larger indices) into `self`.
    fn merge(&mut self, later: ChunkAcc) {
        self.n_evaluated += later.n_evaluated;
        self.n_skipped_domain += later.n_skipped_domain;
        self.n_skipped_trivial += later.n_skipped_trivial;
        self.n_skipped_overflow += later.n_skipped_overflow;
        self.n_violations += later.n_violations;
        // Strict `<` keeps the earlier index on ties.
        if let Some((m, i, p)) = later.min {
            let replace = match &self.min {
                Some((best, _, _)) => m < *best,
                None => true,
            };
            if replace {
                self.min = Some((m, i, p));
            }
        }
        let room = MAX_RECORDED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations.extend(later.violations.into_iter().take(room));
    }
}

fn evaluate(case: &Case, points: &[f64], arity: usize, config: &SampleConfig) -> ChunkAcc {
    let n_points = if arity == 0 { 0 } else { points.len() / arity };
    let threads = config.threads.max(1).min(n_points.max(1));
    let chunk_len = n_points.div_ceil(threads);

    let eval_range = |start: usize, end: usize| -> ChunkAcc {
        let mut acc = ChunkAcc::default();
        for i in start..end {
            acc.absorb_point(case, i, &points[i * arity..(i + 1) * arity], config.fd_step);
        }
        acc
    };

    if threads == 1 || chunk_len == 0 {
        return eval_range(0, n_points);
    }

    let ranges: Vec<(usize, usize)> = (0..n_points)
        .step_by(chunk_len)
        .map(|s| (s, (s + chunk_len).min(n_points)))
        .collect();
    let mut accs: Vec<ChunkAcc> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(s, e)| scope.spawn(move || eval_range(s, e)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut merged = ChunkAcc::default();
    for acc in accs.drain(..) {
        merged.merge(acc);
    }
    merged
}

/// Runs one case under `config`.
pub fn run_case(id: &str, config: &SampleConfig) -> Result<CheckResult, UnknownCase> {
    let case = catalog::find_case(id).ok_or_else(|| UnknownCase(id.to_string()))?;
    let points = sample_points(case, config);
    let arity = case.arity();
    let acc = evaluate(case, &points, arity, config);

    let status = if acc.n_evaluated == 0 {
        RunStatus::Undetermined
    } else {
        match (case.status == Status::Empirical, acc.n_violations > 0) {
            (false, false) => RunStatus::Pass,
            (false, true) => RunStatus::Fail,
            (true, false) => RunStatus::EmpiricalPass,
            (true, true) => RunStatus::EmpiricalFail,
        }
    };
    let (min_margin, argmin) = match acc.min {
        Some((m, _, p)) => (Some(m), Some(p)),
        None => (None, None),
    };
    Ok(CheckResult {
        id: case.id.to_string(),
        status,
        n_evaluated: acc.n_evaluated,
        n_skipped_domain: acc.n_skipped_domain,
        n_skipped_trivial: acc.n_skipped_trivial,
        n_skipped_overflow: acc.n_skipped_overflow,
        n_violations: acc.n_violations,
        min_margin,
        argmin,
        violations: acc.violations,
    })
}

/// Runs the whole catalog in declaration order. Panics if the difference
/// quotient self-calibration fails, since every shape verdict would then be
/// meaningless.
pub fn run_all(config: &SampleConfig) -> Vec<CheckResult> {
    assert!(
        fd_calibration_ok(config.fd_step),
        "finite-difference calibration failed for step {:e}",
        config.fd_step
    );
    catalog::list_cases()
        .iter()
        .map(|id| run_case(id, config).expect("catalog ids are always known"))
        .collect()
}

/// Self-test of the difference-quotient machinery: the second difference of
/// `x³` on `[1, 2]` must reproduce `6x` to `1e-4` relative at 100 points
/// (exact for cubics up to roundoff, so failure means a broken step size or
/// evaluation path, not an analytic limitation).
pub fn fd_calibration_ok(fd_step: f64) -> bool {
    if !(fd_step > 0.0 && fd_step < 1e-2) {
        return false;
    }
    let f = |x: f64| x * x * x;
    for i in 0..100 {
        let x = 1.0 + (i as f64 + 0.5) / 100.0;
        let h = fd_step * x.abs().max(1.0);
        let d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        if (d2 - 6.0 * x).abs() > 1e-4 * (6.0 * x) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize) -> SampleConfig {
        SampleConfig {
            n_samples: n,
            ..SampleConfig::default()
        }
    }

    #[test]
    fn fd_calibration_accepts_default_and_rejects_nonsense() {
        assert!(fd_calibration_ok(1e-5));
        assert!(fd_calibration_ok(1e-6));
        assert!(!fd_calibration_ok(0.0));
        assert!(!fd_calibration_ok(-1e-5));
        assert!(!fd_calibration_ok(0.5));
    }

    #[test]
    fn unknown_id_is_an_error() {
        let err = run_case("no-such-case", &small(10)).unwrap_err();
        assert!(err.to_string().contains("no-such-case"));
    }

    #[test]
    fn rerun_is_bit_identical() {
        let cfg = small(2_000);
        for id in ["lem21-1", "thm-r4-harmonic", "cor-r3-power-k-gt1"] {
            let a = run_case(id, &cfg).unwrap();
            let b = run_case(id, &cfg).unwrap();
            assert_eq!(a, b, "{id} differed between identical runs");
        }
    }

    #[test]
    fn thread_count_never_changes_results() {
        let base = small(3_001);
        for id in ["lem21-2", "cor-r3-geomean", "thm-r4-convex", "thm-ball-2"] {
            let single = run_case(id, &base).unwrap();
            for threads in [2, 3, 8] {
                let cfg = SampleConfig { threads, ..base };
                assert_eq!(single, run_case(id, &cfg).unwrap(), "{id} at {threads} threads");
            }
        }
    }

    #[test]
    fn zero_samples_is_undetermined() {
        let cfg = small(0);
        for id in ["lem21-1", "thm-ball-1", "sth-decreasing"] {
            let r = run_case(id, &cfg).unwrap();
            assert_eq!(r.status, RunStatus::Undetermined, "{id}");
            assert_eq!(r.n_evaluated, 0);
            assert_eq!(r.min_margin, None);
            assert_eq!(r.argmin, None);
        }
    }

    #[test]
    fn skip_accounting_is_conservative() {
        // Every drawn point is either evaluated or skipped, never dropped.
        let cfg = small(5_000);
        for id in ["sth-decreasing", "thm-r4-harmonic", "cor-r5-ineq1", "cor-r3-power-k-gt1"] {
            let r = run_case(id, &cfg).unwrap();
            assert_eq!(r.n_evaluated + r.n_skipped(), 5_000, "{id}");
        }
    }

    #[test]
    fn fixed_grid_evaluates_a_prefix() {
        let full = run_case("thm-ball-2", &small(100_000)).unwrap();
        assert_eq!(full.n_evaluated, 100);
        let prefix = run_case("thm-ball-2", &small(7)).unwrap();
        assert_eq!(prefix.n_evaluated, 7);
        // The k = 1 rows hit equality exactly; the non-strict slack absorbs them.
        assert_eq!(full.status, RunStatus::Pass);
        assert_eq!(full.min_margin, Some(0.0));
    }

    #[test]
    fn strict_asserted_cases_pass_with_positive_margins() {
        let cfg = small(4_000);
        for id in ["lem21-1", "lem21-4", "thm-r1-ineq3", "cor-grunbaum-psi"] {
            let r = run_case(id, &cfg).unwrap();
            assert_eq!(r.status, RunStatus::Pass, "{id}: {:?}", r.min_margin);
            assert_eq!(r.n_violations, 0, "{id}");
            assert!(r.min_margin.unwrap() > -1e-12, "{id}: {:?}", r.min_margin);
            let case = catalog::find_case(id).unwrap();
            assert_eq!(r.argmin.as_ref().unwrap().len(), case.arity(), "{id}");
        }
    }

    #[test]
    fn corrected_bracket_passes_where_printed_form_fails() {
        let cfg = small(4_000);
        let fixed = run_case("lem21-3", &cfg).unwrap();
        assert_eq!(fixed.status, RunStatus::Pass);
        let printed = run_case("lem21-3-printed", &cfg).unwrap();
        assert_eq!(printed.status, RunStatus::EmpiricalFail);
        assert!(printed.n_violations > 0);
        // Exploratory failures still record where they happened.
        assert!(!printed.violations.is_empty());
        assert!(printed.violations.len() <= 100);
        assert!(printed.violations[0].margin < 0.0);
    }

    #[test]
    fn shape_claims_pass_with_snapped_or_positive_margins() {
        let cfg = small(4_000);
        for id in [
            "sth-decreasing",
            "thm-r1-monotone-inc",
            "thm-r1-monotone-dec",
            "thm-r4-decreasing",
            "thm-r4-convex",
            "lem4b-decreasing",
            "cor-r5-increasing",
            "cor-r5-concave",
            "ball-logconvex",
            "proof-fact-logpsi-exp-concave",
            "proof-fact-log-inv-psi-convex",
        ] {
            let r = run_case(id, &cfg).unwrap();
            assert_eq!(r.status, RunStatus::Pass, "{id}: {:?}", r.min_margin);
            assert!(r.min_margin.unwrap() >= 0.0, "{id}: {:?}", r.min_margin);
        }
    }

    #[test]
    fn boundary_bias_still_respects_domains() {
        let cfg = SampleConfig {
            n_samples: 4_000,
            strategy: Strategy::BoundaryBiased,
            ..SampleConfig::default()
        };
        for id in ["thm-r1-ineq1", "cor-r3-geomean", "lem21-5"] {
            let r = run_case(id, &cfg).unwrap();
            assert_eq!(r.n_violations, 0, "{id}: {:?}", r.violations.first());
            assert_eq!(r.status, RunStatus::Pass, "{id}");
        }
    }

    #[test]
    fn grid_strategy_is_seed_independent_and_passes() {
        let a = SampleConfig {
            n_samples: 2_000,
            strategy: Strategy::Grid,
            seed: 1,
            ..SampleConfig::default()
        };
        let b = SampleConfig { seed: 99, ..a };
        let ra = run_case("thm-r1-ineq2", &a).unwrap();
        let rb = run_case("thm-r1-ineq2", &b).unwrap();
        assert_eq!(ra, rb);
        assert_eq!(ra.status, RunStatus::Pass);
    }

    #[test]
    fn sampled_points_lie_in_declared_domains() {
        for id in ["thm-r4-harmonic", "cor-r2-powerratio", "lem21-1", "cor-r5-ineq1"] {
            let case = catalog::find_case(id).unwrap();
            for strategy in [Strategy::Random, Strategy::Grid, Strategy::BoundaryBiased] {
                let cfg = SampleConfig {
                    n_samples: 500,
                    strategy,
                    ..SampleConfig::default()
                };
                let pts = sample_points(case, &cfg);
                let arity = case.arity();
                let pl = case.param_len();
                for chunk in pts.chunks_exact(arity) {
                    for (j, dim) in case.dims.iter().enumerate() {
                        let x = chunk[pl + j];
                        assert!(x > dim.lo, "{id}/{strategy:?}: {x} ≤ lo {}", dim.lo);
                        assert!(x < dim.hi, "{id}/{strategy:?}: {x} ≥ hi {}", dim.hi);
                    }
                }
            }
        }
    }

    #[test]
    fn sort_canonicalization_orders_sampled_coordinates() {
        let asc = catalog::find_case("cor-r2-powerratio").unwrap();
        let cfg = small(300);
        let pts = sample_points(asc, &cfg);
        let (arity, pl) = (asc.arity(), asc.param_len());
        for chunk in pts.chunks_exact(arity) {
            assert!(chunk[pl] <= chunk[pl + 1]);
        }
        let desc = catalog::find_case("cor-r5-ineq3").unwrap();
        let pts = sample_points(desc, &cfg);
        let (arity, pl) = (desc.arity(), desc.param_len());
        for chunk in pts.chunks_exact(arity) {
            assert!(chunk[pl] >= chunk[pl + 1]);
        }
    }

    #[test]
    fn params_cycle_round_robin() {
        let case = catalog::find_case("sth-decreasing").unwrap();
        let pts = sample_points(case, &small(8));
        let arity = case.arity();
        // Parameter rows are [1], [1.5], [2], [5]; index i takes row i mod 4.
        let expected = [1.0, 1.5, 2.0, 5.0, 1.0, 1.5, 2.0, 5.0];
        for (i, chunk) in pts.chunks_exact(arity).enumerate() {
            assert_eq!(chunk[0], expected[i]);
        }
    }

    #[test]
    fn run_all_covers_the_catalog_in_order() {
        let results = run_all(&small(200));
        let ids: Vec<&str> = results.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, catalog::list_cases());
        // Nothing should be undetermined at 200 samples.
        assert!(results.iter().all(|r| r.status != RunStatus::Undetermined));
    }

    /// Full-scale smoke run; excluded from the default suite for time.
    /// `cargo test -p psi-certify --release --lib -- --ignored full_scale --nocapture`
    #[test]
    #[ignore]
    fn full_scale_run_summary() {
        let t0 = std::time::Instant::now();
        let results = run_all(&SampleConfig::default());
        let dt = t0.elapsed();
        for r in &results {
            println!(
                "{:34} {:15} eval={:6} skip={:6} viol={:6} min={:?}",
                r.id,
                r.status.label(),
                r.n_evaluated,
                r.n_skipped(),
                r.n_violations,
                r.min_margin
            );
        }
        println!("total {dt:?}");
        for r in &results {
            let case = catalog::find_case(&r.id).unwrap();
            if case.status != Status::Empirical {
                assert!(
                    matches!(r.status, RunStatus::Pass),
                    "{}: {:?} min={:?} first violation {:?}",
                    r.id,
                    r.status,
                    r.min_margin,
                    r.violations.first()
                );
                assert!(r.min_margin.unwrap() >= -1e-12, "{}: {:?}", r.id, r.min_margin);
            }
        }
    }

    #[test]
    fn empirical_cases_report_without_asserting() {
        let cfg = small(3_000);
        for id in [
            "lem21-3-printed",
            "thm-r4-harmonic-printed",
            "cor-r5-ineq2",
            "cor-r3-power-k-lt1-printed",
            "cor-r3-power-k-gt1-printed",
            "cor-grunbaum-ball-real",
        ] {
            let r = run_case(id, &cfg).unwrap();
            assert!(
                matches!(r.status, RunStatus::EmpiricalPass | RunStatus::EmpiricalFail),
                "{id} must stay exploratory, got {:?}",
                r.status
            );
        }
    }
}
