//! Three generic inequality engines reused across catalog cases: a
//! log-convexity ratio chain, a power-ratio monotone-direction check, and a
//! Grünbaum-type superadditivity check.

use crate::error::EvalError;

/// Declared monotone direction of `g(t) = (f(t) − 1)/t` in [`grunbaum_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrunbaumDirection {
    Increasing,
    Decreasing,
}

/// Declared shape of `h(x) = ln f(eˣ)` in [`power_ratio_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogExpShape {
    Convex,
    Concave,
}

/// Ratio chain for a positive log-convex `f` on `[0, ·)`: the function
/// `g(z) = f(z)^a / f(az)` is decreasing for `a ≥ 1` (increasing for
/// `0 < a ≤ 1`), which chains into
/// `f(y)^a/f(ay) ≤ f(x)^a/f(ax) ≤ f(0⁺)^{a−1}` for `0 ≤ x ≤ y`.
///
/// Returns `min(m1, m2)` in log space: `m1` compares the ratio at `x` and `y`,
/// `m2` compares the ratio at `x` against the boundary value. Both are ≥ 0
/// exactly when the chain holds; `a = 1` collapses the chain and returns 0
/// exactly. The probe at `0.0` is the caller's hook for the one-sided limit
/// `f(0⁺)`; a closure may return `+∞` there, which makes the boundary margin
/// `+∞` and drops it out of the min.
pub fn neuman_check<F>(f: F, a: f64, x: f64, y: f64) -> Result<f64, EvalError>
where
    F: Fn(f64) -> Result<f64, EvalError>,
{
    if !(a > 0.0) {
        return Err(EvalError::domain(a, "a > 0 for neuman_check"));
    }
    if !(0.0 <= x && x <= y) {
        return Err(EvalError::domain(x, "0 <= x <= y for neuman_check"));
    }
    if a == 1.0 {
        return Ok(0.0);
    }
    let ln_f = |z: f64| -> Result<f64, EvalError> {
        let v = f(z)?;
        if v <= 0.0 {
            return Err(EvalError::pole(z, "f > 0 at every probe of neuman_check"));
        }
        Ok(v.ln())
    };
    let chain = |z: f64| -> Result<f64, EvalError> { Ok(a * ln_f(z)? - ln_f(a * z)?) };
    let lx = chain(x)?;
    let ly = chain(y)?;
    let boundary = (a - 1.0) * ln_f(0.0)?;
    let (m1, m2) = if a > 1.0 {
        (lx - ly, boundary - lx)
    } else {
        (ly - lx, lx - boundary)
    };
    Ok(m1.min(m2))
}

/// Monotone direction of `g(x) = f(x^k)/f(x)^k` predicted from the shape of
/// `h(x) = ln f(eˣ)`. With `h` convex, `g` is increasing on `(0, 1)` for
/// `0 < k < 1`, increasing on `(1, ∞)` for `k > 1` and for `k < 0`, and
/// decreasing on the remaining three cells; a concave `h` mirrors every
/// direction.
///
/// Returns the sign-adjusted linear-space difference `±(g(x2) − g(x1))`,
/// positive exactly when `g` moved in the predicted direction between the two
/// abscissas. Requires `x1 < x2` strictly on one side of 1 (`x1 = x2` and
/// `k = 1` both return 0 exactly).
pub fn power_ratio_check<F>(
    f: F,
    k: f64,
    x1: f64,
    x2: f64,
    shape: LogExpShape,
) -> Result<f64, EvalError>
where
    F: Fn(f64) -> Result<f64, EvalError>,
{
    if k == 0.0 {
        return Err(EvalError::domain(k, "k != 0 for power_ratio_check"));
    }
    if !(x1 > 0.0) {
        return Err(EvalError::domain(x1, "x1 > 0 for power_ratio_check"));
    }
    if k == 1.0 || x1 == x2 {
        return Ok(0.0);
    }
    if !(x1 < x2) {
        return Err(EvalError::domain(x1, "x1 < x2 for power_ratio_check"));
    }
    let below = x1 < 1.0 && x2 < 1.0;
    let above = x1 > 1.0 && x2 > 1.0;
    if !(below || above) {
        return Err(EvalError::domain(
            x1,
            "x1, x2 strictly on one side of 1 for power_ratio_check",
        ));
    }
    let g = |x: f64| -> Result<f64, EvalError> {
        let num = f(x.powf(k))?;
        let den = f(x)?;
        if num <= 0.0 || den <= 0.0 {
            return Err(EvalError::pole(x, "f > 0 at every probe of power_ratio_check"));
        }
        Ok((num.ln() - k * den.ln()).exp())
    };
    let increasing_if_convex = if k > 0.0 && k < 1.0 { below } else { above };
    let increasing = match shape {
        LogExpShape::Convex => increasing_if_convex,
        LogExpShape::Concave => !increasing_if_convex,
    };
    let d = g(x2)? - g(x1)?;
    Ok(if increasing { d } else { -d })
}

/// Superadditivity margin of `h(u) = f(u²)` under the Pythagorean composition
/// `z = √(x² + y²)`: returns `±(1 + h(z) − h(x) − h(y))`, positive exactly
/// when the direction predicted by the declared monotonicity of
/// `g(t) = (f(t) − 1)/t` holds (`1 + h(z) ≥ h(x) + h(y)` for increasing `g`,
/// reversed for decreasing). Domain thresholds are enforced by `f` itself.
pub fn grunbaum_check<F>(
    f: F,
    x: f64,
    y: f64,
    direction: GrunbaumDirection,
) -> Result<f64, EvalError>
where
    F: Fn(f64) -> Result<f64, EvalError>,
{
    let h = |u: f64| f(u * u);
    let raw = 1.0 + h(x.hypot(y))? - h(x)? - h(y)?;
    Ok(match direction {
        GrunbaumDirection::Increasing => raw,
        GrunbaumDirection::Decreasing => -raw,
    })
}
