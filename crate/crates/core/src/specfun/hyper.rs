//! Hyperbolic helpers with domain checking, and the cosh-midpoint identity.
//! (Plain tanh/cosh/sinh come straight from `f64`; only the partial functions
//! get checked wrappers.)

use crate::error::EvalError;

/// artanh(x) = ½ ln((1+x)/(1−x)) for |x| < 1.
pub fn artanh(x: f64) -> Result<f64, EvalError> {
    if !(x > -1.0 && x < 1.0) {
        return Err(EvalError::domain(x, "|x| < 1 for artanh"));
    }
    Ok(x.atanh())
}

/// arcosh(x) for x ≥ 1.
pub fn arcosh(x: f64) -> Result<f64, EvalError> {
    if !(x >= 1.0) {
        return Err(EvalError::domain(x, "x >= 1 for arcosh"));
    }
    Ok(x.acosh())
}

/// cosh((arcosh r + arcosh s)/2) by the corrected closed form
/// √((1 + rs + √((r²−1)(s²−1)))/2); equals r when r = s.
pub fn cosh_half_sum(r: f64, s: f64) -> Result<f64, EvalError> {
    if !(r >= 1.0) {
        return Err(EvalError::domain(r, "r >= 1 for cosh_half_sum"));
    }
    if !(s >= 1.0) {
        return Err(EvalError::domain(s, "s >= 1 for cosh_half_sum"));
    }
    Ok((0.5 * (1.0 + r * s + ((r * r - 1.0) * (s * s - 1.0)).sqrt())).sqrt())
}

/// The same expression with the literal /(rs) denominator it is sometimes
/// stated with: √((1 + rs + √((r²−1)(s²−1)))/(rs)). Not a midpoint identity —
/// kept only so the `thm-r4-harmonic-printed` case can evaluate it as written.
pub fn cosh_half_sum_printed(r: f64, s: f64) -> Result<f64, EvalError> {
    if !(r >= 1.0) {
        return Err(EvalError::domain(r, "r >= 1 for cosh_half_sum_printed"));
    }
    if !(s >= 1.0) {
        return Err(EvalError::domain(s, "s >= 1 for cosh_half_sum_printed"));
    }
    Ok(((1.0 + r * s + ((r * r - 1.0) * (s * s - 1.0)).sqrt()) / (r * s)).sqrt())
}
