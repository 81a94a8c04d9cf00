//! Bracketed root finding for the two anchor constants: c (ψ(c) = 0) and
//! t (ψ(e^t) = 1).

use std::sync::OnceLock;

use crate::error::EvalError;
use crate::specfun::psi::{digamma, trigamma};

/// Bisect an increasing continuous function to a bracket of width `tol`.
fn bisect_increasing(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<f64, EvalError> {
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(EvalError::NotConverged)
}

/// c — the unique positive root of ψ: bisection on [1.4, 1.5] to width 1e-15,
/// then one Newton polish with ψ′. Deterministic; cached after the first call.
pub fn psi_root() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| {
        let c0 = bisect_increasing(|x| digamma(x).unwrap(), 1.4, 1.5, 1e-15)
            .expect("psi bracket [1.4, 1.5] must converge");
        c0 - digamma(c0).unwrap() / trigamma(c0).unwrap()
    })
}

/// t — the solution of ψ(e^t) = 1, i.e. t = ln y* where ψ(y*) = 1.
/// Bracketed on y ∈ [3, 3.5]; cached.
pub fn psi_exp_one_root() -> f64 {
    static T: OnceLock<f64> = OnceLock::new();
    *T.get_or_init(|| {
        let y0 = bisect_increasing(|y| digamma(y).unwrap() - 1.0, 3.0, 3.5, 1e-15)
            .expect("psi = 1 bracket [3, 3.5] must converge");
        let y = y0 - (digamma(y0).unwrap() - 1.0) / trigamma(y0).unwrap();
        y.ln()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_root_digits() {
        let c = psi_root();
        assert!((c - 1.4616321449683623).abs() < 5e-15, "c = {c}");
        assert!(digamma(c).unwrap().abs() <= 1e-13);
        assert!((1.4..=1.5).contains(&c));
    }

    #[test]
    fn psi_exp_one_root_digits() {
        let t = psi_exp_one_root();
        assert!((t - 1.1641414028741108).abs() < 5e-14, "t = {t}");
        assert!((digamma(t.exp()).unwrap() - 1.0).abs() < 1e-13);
    }
}
