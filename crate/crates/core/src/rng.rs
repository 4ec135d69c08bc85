//! Seeded RNG streams and the handful of distributions the crate needs.
//!
//! Every stochastic component draws from a ChaCha stream derived from
//! `(seed, stream id)`, so parallel workers produce results independent of
//! scheduling order and identical across runs.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::math;

pub type Rng = ChaCha8Rng;

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn stream(seed: u64, stream: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform draw in [0, 1) with 53 bits of precision.
pub fn uniform(rng: &mut Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform draw in [lo, hi).
pub fn uniform_in(rng: &mut Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * uniform(rng)
}

/// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
pub fn normal(rng: &mut Rng) -> f64 {
    let u1 = 1.0 - uniform(rng); // (0, 1]
    let u2 = uniform(rng);
    math::sqrt(-2.0 * math::ln(u1)) * math::cos(2.0 * core::f64::consts::PI * u2)
}

/// Exponential draw with the given rate (mean 1/rate).
pub fn exponential(rng: &mut Rng, rate: f64) -> f64 {
    -math::ln(1.0 - uniform(rng)) / rate
}

/// Index draw from an unnormalized weight vector; the final bucket absorbs
/// any rounding residue.
pub fn categorical(rng: &mut Rng, weights: &[f64]) -> usize {
    debug_assert!(!weights.is_empty());
    let total: f64 = weights.iter().sum();
    let mut u = uniform(rng) * total;
    for (i, w) in weights.iter().enumerate() {
        u -= w;
        if u < 0.0 {
            return i;
        }
    }
    weights.len() - 1
}

/// Fisher-Yates shuffle of index order, driven by the stream.
pub fn shuffled_indices(rng: &mut Rng, n: usize) -> alloc::vec::Vec<usize> {
    let mut idx: alloc::vec::Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        idx.swap(i, j);
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = {
            let mut r = stream(7, 0);
            (0..4).map(|_| r.next_u64()).collect()
        };
        let a2: Vec<u64> = {
            let mut r = stream(7, 0);
            (0..4).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = stream(7, 1);
            (0..4).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, a2);
        assert_ne!(a, b);
    }

    #[test]
    fn uniform_in_unit_interval() {
        let mut r = stream(1, 0);
        for _ in 0..1000 {
            let u = uniform(&mut r);
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn normal_moments_are_sane() {
        let mut r = stream(3, 0);
        let n = 200_000;
        let xs: Vec<f64> = (0..n).map(|_| normal(&mut r)).collect();
        let m = crate::math::mean(&xs);
        let s = crate::math::sample_std(&xs);
        assert!(m.abs() < 0.01, "mean {m}");
        assert!((s - 1.0).abs() < 0.01, "std {s}");
    }

    #[test]
    fn categorical_respects_weights() {
        let mut r = stream(5, 0);
        let w = [0.1, 0.0, 0.9];
        let mut counts = [0usize; 3];
        for _ in 0..20_000 {
            counts[categorical(&mut r, &w)] += 1;
        }
        assert_eq!(counts[1], 0);
        let p0 = counts[0] as f64 / 20_000.0;
        assert!((p0 - 0.1).abs() < 0.02);
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut r = stream(9, 2);
        let idx = shuffled_indices(&mut r, 100);
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..100).collect::<Vec<_>>());
    }
}
