//! The five elementary ψ bounds as named, signed margins (positive ⟺ the
//! bound holds at that point).

use crate::error::EvalError;
use crate::specfun::{digamma, tetragamma, trigamma};

/// Signed margins of the five bounds at one point. Every field is positive
/// exactly when its sub-inequality holds.
#[derive(Debug, Clone, Copy)]
pub struct Lemma21Margins {
    /// ψ(x) − (ln x − 1/x)
    pub m1_lower: f64,
    /// (ln x − 1/(2x)) − ψ(x)
    pub m1_upper: f64,
    /// ψ′(x) − 1/x − 1/(2x²)
    pub m2: f64,
    /// (2/x − 2ψ′(x)) − ψ″(x) — see `m3_printed` for why the coefficient is 2
    pub m3: f64,
    /// ψ′(x)² + ψ″(x)
    pub m4: f64,
    /// 1 − ψ′(x)·e^{ψ(x)}
    pub m5: f64,
}

impl Lemma21Margins {
    /// The smallest of the six margins.
    pub fn min(&self) -> f64 {
        self.m1_lower
            .min(self.m1_upper)
            .min(self.m2)
            .min(self.m3)
            .min(self.m4)
            .min(self.m5)
    }

    pub fn all_positive(&self) -> bool {
        self.min() > 0.0
    }
}

/// Lower bound of the two-sided ψ bracket: ln x − 1/x.
pub fn psi_lower(x: f64) -> Result<f64, EvalError> {
    if !(x > 0.0) {
        return Err(EvalError::pole(x, "x > 0 for psi_lower"));
    }
    Ok(x.ln() - 1.0 / x)
}

/// Upper bound of the two-sided ψ bracket: ln x − 1/(2x).
pub fn psi_upper(x: f64) -> Result<f64, EvalError> {
    if !(x > 0.0) {
        return Err(EvalError::pole(x, "x > 0 for psi_upper"));
    }
    Ok(x.ln() - 0.5 / x)
}

/// All six margins at x.
///
/// `m3` uses the bound ψ″(x) < 2/x − 2ψ′(x). The tighter 1/x variant this
/// family of bounds is sometimes stated with is false for x ≳ 1.05 (its margin
/// reaches −0.395 near x ≈ 1.76); the 2/x form follows from the integral
/// representations via 2(1 − e^{−t}) ≥ 2t − t² for t ≥ 0 and is the one that
/// actually holds on all of (0, ∞). The 1/x variant is kept as [`m3_printed`]
/// and tracked by the empirical catalog case `lem21-3-printed`.
pub fn check_lemma21(x: f64) -> Result<Lemma21Margins, EvalError> {
    let psi = digamma(x)?;
    let psi1 = trigamma(x)?;
    let psi2 = tetragamma(x)?;
    Ok(Lemma21Margins {
        m1_lower: psi - (x.ln() - 1.0 / x),
        m1_upper: (x.ln() - 0.5 / x) - psi,
        m2: psi1 - 1.0 / x - 0.5 / (x * x),
        m3: (2.0 / x - 2.0 * psi1) - psi2,
        m4: psi1 * psi1 + psi2,
        m5: 1.0 - psi1 * psi.exp(),
    })
}

/// Margin of the stricter — and false — 1/x form of the third bound:
/// (1/x − 2ψ′(x)) − ψ″(x). Negative for x ≳ 1.05.
pub fn m3_printed(x: f64) -> Result<f64, EvalError> {
    Ok((1.0 / x - 2.0 * trigamma(x)?) - tetragamma(x)?)
}
