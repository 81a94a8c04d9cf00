//! Volume of the unit n-ball two independent ways, and the ball inequality
//! bodies. All Ω arithmetic is in log space (Ω_n underflows past n ≈ 340).

use crate::error::EvalError;
use crate::specfun::log_gamma;

/// ln Ω_n = (n/2)·ln π − ln Γ(n/2 + 1) for real n ≥ 0.
pub fn log_omega(n: f64) -> Result<f64, EvalError> {
    if !(n >= 0.0) {
        return Err(EvalError::domain(n, "n >= 0 for log_omega"));
    }
    Ok(0.5 * n * std::f64::consts::PI.ln() - log_gamma(0.5 * n + 1.0)?)
}

/// Ω_n itself (underflows gracefully to 0 for large n).
pub fn omega(n: f64) -> Result<f64, EvalError> {
    Ok(log_omega(n)?.exp())
}

/// ln Ω_n via the sine-power product formula Ω_n = ∏_{j=1}^n ∫₀^π sin^j t dt,
/// using the Wallis recurrence I₀ = π, I₁ = 2, I_j = I_{j−2}·(j−1)/j and
/// accumulating Σ ln I_j. An independent check path for `log_omega`.
pub fn omega_product_oracle(n: u32) -> Result<f64, EvalError> {
    if n > 300 {
        return Err(EvalError::domain(f64::from(n), "n <= 300 for omega_product_oracle"));
    }
    let mut prev = std::f64::consts::PI; // I_{j−2}
    let mut curr = 2.0; // I_{j−1}
    let mut acc = 0.0;
    for j in 1..=n {
        let i_j = if j == 1 {
            2.0
        } else {
            let v = prev * (f64::from(j) - 1.0) / f64::from(j);
            prev = curr;
            curr = v;
            v
        };
        acc += i_j.ln();
    }
    Ok(acc)
}

/// Margin of ln Ω_{2n−1} ≥ ½(ln Ω_{2n} + ln Ω_{2n−2}); must be ≥ 0 for n ≥ 1.
pub fn ball_ineq_1(n: u32) -> Result<f64, EvalError> {
    if n < 1 {
        return Err(EvalError::domain(f64::from(n), "n >= 1 for ball_ineq_1"));
    }
    let m = f64::from(n);
    Ok(log_omega(2.0 * m - 1.0)? - 0.5 * (log_omega(2.0 * m)? + log_omega(2.0 * m - 2.0)?))
}

/// Margin of (ln Ω_{k(n−1)} − ln Ω_{kn}) − k(ln Ω_{n−1} − ln Ω_n); ≥ 0 for
/// n, k ≥ 1 and exactly 0 at k = 1.
pub fn ball_ineq_2(n: u32, k: u32) -> Result<f64, EvalError> {
    if n < 1 {
        return Err(EvalError::domain(f64::from(n), "n >= 1 for ball_ineq_2"));
    }
    if k < 1 {
        return Err(EvalError::domain(f64::from(k), "k >= 1 for ball_ineq_2"));
    }
    let (n, k) = (f64::from(n), f64::from(k));
    Ok((log_omega(k * (n - 1.0))? - log_omega(k * n)?)
        - k * (log_omega(n - 1.0)? - log_omega(n)?))
}

/// Margin of the superadditivity 1 + 1/Ω_{r+s} ≥ 1/Ω_r + 1/Ω_s at real
/// indices; needs r + s small enough that 1/Ω_{r+s} stays representable.
///
/// For r + s ≤ 60 the Ω values are still comfortably representable and the
/// expression is evaluated directly in linear space; beyond that only the
/// reciprocals are finite, so the margin is assembled from exp of log terms
/// with a compensated sum (the margins out there are large, so the residual
/// rounding is immaterial).
pub fn grunbaum_ball_real(r: f64, s: f64) -> Result<f64, EvalError> {
    if !(r >= 2.0) {
        return Err(EvalError::domain(r, "r >= 2 for grunbaum_ball"));
    }
    if !(s >= 2.0) {
        return Err(EvalError::domain(s, "s >= 2 for grunbaum_ball"));
    }
    let l_rs = log_omega(r + s)?;
    let l_r = log_omega(r)?;
    let l_s = log_omega(s)?;
    if r + s <= 60.0 {
        let o_rs = l_rs.exp();
        let o_r = l_r.exp();
        let o_s = l_s.exp();
        return Ok((1.0 + o_rs) / o_rs - (o_r + o_s) / (o_r * o_s));
    }
    if -l_rs > 709.0 {
        return Err(EvalError::overflow(r + s));
    }
    // compensated 4-term sum: the three exp terms can span many magnitudes
    let terms = [1.0, (-l_rs).exp(), -(-l_r).exp(), -(-l_s).exp()];
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in terms {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    Ok(sum + comp)
}

/// Integer form of [`grunbaum_ball_real`] (domain ℕ \\ {0, 1}).
pub fn grunbaum_ball(r: u32, s: u32) -> Result<f64, EvalError> {
    grunbaum_ball_real(f64::from(r), f64::from(s))
}
