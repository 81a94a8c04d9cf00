//! Deterministic per-case random streams.
//!
//! Every checkable case draws its sample points from a ChaCha8 stream whose
//! 256-bit key is derived from `(seed, case_id)`. The derivation hashes the
//! case id with FNV-1a, folds the user seed in by XOR, and expands the result
//! through four rounds of SplitMix64. Two properties matter:
//!
//! * the stream for a given `(seed, case_id)` pair is identical across runs,
//!   platforms, and thread counts, so reports are byte-for-byte reproducible;
//! * streams for different cases under the same seed are statistically
//!   independent, so adding or reordering cases never perturbs another
//!   case's sample set.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// FNV-1a over a byte string (64-bit variant).
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// One step of the SplitMix64 sequence; advances `state` and returns the
/// mixed output. Used purely as a key-expansion function here.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic uniform stream for one case.
pub struct CaseRng {
    inner: ChaCha8Rng,
}

impl CaseRng {
    /// Builds the stream for `(seed, case_id)`.
    pub fn new(seed: u64, case_id: &str) -> Self {
        let mut state = seed ^ fnv1a(case_id.as_bytes());
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        CaseRng {
            inner: ChaCha8Rng::from_seed(key),
        }
    }

    /// Next uniform in [0, 1): the top 53 bits of a u64 scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv1a_matches_reference_vectors() {
        // Published FNV-1a/64 test vectors.
        assert_eq!(fnv1a(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a(b"a"), 0xaf63_dc4c_8601_ec8c);
        assert_eq!(fnv1a(b"foobar"), 0x85944171f73967e8);
    }

    #[test]
    fn splitmix64_matches_reference_sequence() {
        // First three outputs from state 1234567 (reference implementation).
        let mut state = 1234567u64;
        assert_eq!(splitmix64(&mut state), 0x599e_d017_fb08_fc85);
        assert_eq!(splitmix64(&mut state), 0x2c73_f084_5854_0fa5);
        assert_eq!(splitmix64(&mut state), 0x883e_bce5_a3f2_7c77);
    }

    #[test]
    fn same_seed_and_id_reproduce_the_stream() {
        let mut a = CaseRng::new(42, "thm-r4-harmonic");
        let mut b = CaseRng::new(42, "thm-r4-harmonic");
        for _ in 0..64 {
            assert_eq!(a.next_f64().to_bits(), b.next_f64().to_bits());
        }
    }

    #[test]
    fn different_ids_decorrelate() {
        let mut a = CaseRng::new(42, "lem21-1");
        let mut b = CaseRng::new(42, "lem21-2");
        let equal = (0..64)
            .filter(|_| a.next_f64().to_bits() == b.next_f64().to_bits())
            .count();
        assert_eq!(equal, 0);
    }

    #[test]
    fn different_seeds_decorrelate() {
        let mut a = CaseRng::new(42, "lem21-1");
        let mut b = CaseRng::new(43, "lem21-1");
        let equal = (0..64)
            .filter(|_| a.next_f64().to_bits() == b.next_f64().to_bits())
            .count();
        assert_eq!(equal, 0);
    }

    #[test]
    fn uniforms_are_in_unit_interval_and_nondegenerate() {
        let mut rng = CaseRng::new(7, "x");
        let mut min = 1.0f64;
        let mut max = 0.0f64;
        for _ in 0..10_000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
            min = min.min(u);
            max = max.max(u);
        }
        assert!(min < 0.01 && max > 0.99);
    }
}
