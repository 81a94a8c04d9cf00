//! Independent high-precision references for the ψ/Γ family.
//!
//! Everything here is deliberately slow and structurally unrelated to the fast
//! kernels it certifies: ψ, ψ′, ψ″ come from their defining series with
//! compensated summation and an Euler–Maclaurin tail, ln Γ from the
//! Weierstrass product, plus a Lanczos evaluation as a second, independent
//! ln Γ path. No shared code, no shared coefficients.

/// Euler–Mascheroni constant γ, correctly rounded.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431;

/// Neumaier (improved Kahan) compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

fn terms_for(x: f64) -> usize {
    500usize.max((2.0 * x).ceil() as usize)
}

/// ψ(x) for x > 0 by the series ψ(x) = −γ + Σ_{n≥0} (1/(n+1) − 1/(n+x)),
/// truncated at N = max(500, ⌈2x⌉) with an Euler–Maclaurin tail through B₈.
pub fn digamma_ref(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "digamma_ref: need finite x > 0");
    let n = terms_for(x);
    let mut s = Neumaier::default();
    for i in 0..n {
        let t = i as f64;
        s.add(1.0 / (t + 1.0) - 1.0 / (t + x));
    }
    // Tail Σ_{n=N}^∞ f(n) for f(t) = 1/(t+1) − 1/(t+x):
    //   ∫_N^∞ f + f(N)/2 − f′(N)/12 + f‴(N)/720 − f⁗′(N)/30240 + f⁽⁷⁾(N)/1209600
    // with f⁽ᵏ⁾(t) = (−1)^k k! (1/(t+1)^{k+1} − 1/(t+x)^{k+1}).
    let a1 = n as f64 + 1.0;
    let ax = n as f64 + x;
    let integral = (ax / a1).ln();
    let f0 = 1.0 / a1 - 1.0 / ax;
    let d1 = -(a1.powi(-2) - ax.powi(-2));
    let d3 = -6.0 * (a1.powi(-4) - ax.powi(-4));
    let d5 = -120.0 * (a1.powi(-6) - ax.powi(-6));
    let d7 = -5040.0 * (a1.powi(-8) - ax.powi(-8));
    let tail = integral + 0.5 * f0 - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0 + d7 / 1209600.0;
    -EULER_GAMMA + s.total() + tail
}

/// ψ′(x) for x > 0 by Σ_{n≥0} (n+x)^{−2} with an asymptotic tail at u = N+x.
pub fn trigamma_ref(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "trigamma_ref: need finite x > 0");
    let n = terms_for(x);
    let mut s = Neumaier::default();
    for i in 0..n {
        let d = i as f64 + x;
        s.add(1.0 / (d * d));
    }
    // Σ_{n=N}^∞ (n+x)^{−2} = ψ′(u) for u = N+x, by the asymptotic series.
    let u = n as f64 + x;
    let tail = 1.0 / u + 1.0 / (2.0 * u * u) + 1.0 / (6.0 * u.powi(3)) - 1.0 / (30.0 * u.powi(5))
        + 1.0 / (42.0 * u.powi(7))
        - 1.0 / (30.0 * u.powi(9));
    s.total() + tail
}

/// ψ″(x) for x > 0 by Σ_{n≥0} −2(n+x)^{−3} with an asymptotic tail at u = N+x.
pub fn tetragamma_ref(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "tetragamma_ref: need finite x > 0");
    let n = terms_for(x);
    let mut s = Neumaier::default();
    for i in 0..n {
        let d = i as f64 + x;
        s.add(-2.0 / (d * d * d));
    }
    let u = n as f64 + x;
    let u2 = u * u;
    let tail = -1.0 / u2 - 1.0 / u.powi(3) - 0.5 / u2.powi(2) + 1.0 / (6.0 * u2.powi(3))
        - 1.0 / (6.0 * u2.powi(4))
        + 0.3 / u2.powi(5);
    s.total() + tail
}

/// ln Γ(x) by the Weierstrass product
/// ln Γ(x) = −γx − ln x + Σ_{n≥1} (x/n − ln(1 + x/n)),
/// truncated with an Euler–Maclaurin tail. Intended range: x ∈ [1e-3, 2e3].
pub fn log_gamma_ref(x: f64) -> f64 {
    assert!(
        x > 0.0 && x <= 2.0e3,
        "log_gamma_ref: need 0 < x ≤ 2e3 (got {x})"
    );
    let n = terms_for(x);
    let mut s = Neumaier::default();
    for i in 1..n {
        let t = i as f64;
        s.add(x / t - (x / t).ln_1p());
    }
    // Tail for f(t) = x/t − ln(1 + x/t); ∫_N^∞ f = (N+x)·ln(1+x/N) − x.
    let nn = n as f64;
    let nx = nn + x;
    let integral = nx * (x / nn).ln_1p() - x;
    let f0 = x / nn - (x / nn).ln_1p();
    let d1 = 1.0 / nn - x / nn.powi(2) - 1.0 / nx;
    let d3 = 2.0 / nn.powi(3) - 6.0 * x / nn.powi(4) - 2.0 / nx.powi(3);
    let d5 = 24.0 / nn.powi(5) - 120.0 * x / nn.powi(6) - 24.0 / nx.powi(5);
    let d7 = 720.0 / nn.powi(7) - 5040.0 * x / nn.powi(8) - 720.0 / nx.powi(7);
    let tail = integral + 0.5 * f0 - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0 + d7 / 1209600.0;
    -EULER_GAMMA * x - x.ln() + s.total() + tail
}

/// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(x) by the Lanczos approximation — a second reference path that shares
/// nothing with either the kernel or `log_gamma_ref`. Valid for x > 0.
pub fn log_gamma_lanczos(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "log_gamma_lanczos: need x > 0");
    if x < 0.5 {
        // reflection: ln Γ(x) = ln(π / sin(πx)) − ln Γ(1 − x), sin(πx) > 0 here
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln()
            - log_gamma_lanczos(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Positive root of ψ by bisection on `digamma_ref` over [1.4, 1.5].
pub fn psi_root_ref() -> f64 {
    let (mut lo, mut hi) = (1.4_f64, 1.5_f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if digamma_ref(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < f64::EPSILON {
            break;
        }
    }
    0.5 * (lo + hi)
}
