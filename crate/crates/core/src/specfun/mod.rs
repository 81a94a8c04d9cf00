//! Evaluation kernels for Γ, ln Γ, ψ, ψ′, ψ″ and the package constants.

mod gamma;
mod hyper;
mod psi;
mod roots;

pub use gamma::{gamma, log_abs_gamma_signed, log_gamma, sth_ratio};
pub use hyper::{arcosh, artanh, cosh_half_sum, cosh_half_sum_printed};
pub use psi::{digamma, tetragamma, trigamma};
pub use roots::{psi_exp_one_root, psi_root};

/// Euler–Mascheroni constant γ, correctly rounded; cross-checked against
/// −digamma(1) in the tests (stored as a literal so the kernel does not have
/// to bootstrap its own base constant).
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431;

/// The package's base constants.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    /// γ
    pub euler_gamma: f64,
    /// c — the unique positive root of ψ
    pub psi_root_c: f64,
    /// ln 2
    pub ln2: f64,
    /// π
    pub pi: f64,
}

/// Base constants, with `psi_root_c` computed by the bracketed solver.
pub fn constants() -> Constants {
    Constants {
        euler_gamma: EULER_GAMMA,
        psi_root_c: psi_root(),
        ln2: std::f64::consts::LN_2,
        pi: std::f64::consts::PI,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_invariants() {
        let k = constants();
        assert!(digamma(k.psi_root_c).unwrap().abs() <= 1e-13);
        let rel = (k.euler_gamma + digamma(1.0).unwrap()).abs() / k.euler_gamma;
        assert!(rel <= 1e-14);
        // first five significant digits of c
        assert!((k.psi_root_c - 1.4616).abs() < 1e-4);
        assert_eq!(k.ln2, std::f64::consts::LN_2);
        assert_eq!(k.pi, std::f64::consts::PI);
    }
}
