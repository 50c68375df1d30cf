//! Reproducible random streams.
//!
//! All randomness in the crate flows through [`GaussianStream`]: a ChaCha12
//! generator producing a uniform 64-bit stream that is mapped to normal
//! deviates with the Box–Muller transform. Sub-streams are addressed by a
//! 64-bit stream id via ChaCha's native stream counter, so drawing for one
//! block (or one ensemble member) is independent of the order in which the
//! others are drawn.

use num_complex::Complex64;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use std::f64::consts::TAU;

/// Stream-id namespace for interaction blocks: the four indices
/// `(i, j, a, b)` packed as 16-bit fields.
pub fn block_stream_id(i: usize, j: usize, a: usize, b: usize) -> u64 {
    debug_assert!(i < 1 << 15 && j < 1 << 16 && a < 1 << 16 && b < 1 << 16);
    ((i as u64) << 48) | ((j as u64) << 32) | ((a as u64) << 16) | b as u64
}

/// Stream-id namespace for initial states and Monte Carlo members; disjoint
/// from [`block_stream_id`] by the top bit.
pub fn sample_stream_id(member: u64) -> u64 {
    (1 << 63) | member
}

/// Deterministic Gaussian deviate source.
pub struct GaussianStream {
    rng: ChaCha12Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng, spare: None }
    }

    /// Uniform deviate in the half-open interval `(0, 1]`.
    pub fn uniform_open01(&mut self) -> f64 {
        // 53 significant bits; +1 keeps the value strictly positive so the
        // Box-Muller logarithm is finite.
        ((self.rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal deviate via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.uniform_open01();
        let u2 = self.uniform_open01();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }

    /// Complex deviate with independent N(0, sigma^2/2) real and imaginary
    /// parts, i.e. `E|z|^2 = sigma^2`.
    pub fn complex_normal(&mut self, sigma: f64) -> Complex64 {
        let scale = sigma / std::f64::consts::SQRT_2;
        Complex64::new(scale * self.normal(), scale * self.normal())
    }

    /// Haar-random unit vector of the given dimension.
    pub fn haar_unit_vector(&mut self, dim: usize) -> Vec<Complex64> {
        assert!(dim > 0, "haar_unit_vector: empty subspace");
        loop {
            let v: Vec<Complex64> = (0..dim).map(|_| self.complex_normal(1.0)).collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-30 {
                return v.into_iter().map(|z| z / norm).collect();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_stream() {
        let mut a = GaussianStream::new(7, 3);
        let mut b = GaussianStream::new(7, 3);
        for _ in 0..100 {
            assert_eq!(a.normal().to_bits(), b.normal().to_bits());
        }
        let mut c = GaussianStream::new(7, 4);
        assert_ne!(a.normal().to_bits(), c.normal().to_bits());
    }

    #[test]
    fn normal_moments() {
        let mut s = GaussianStream::new(1, 0);
        let n = 200_000;
        let (mut m1, mut m2) = (0.0, 0.0);
        for _ in 0..n {
            let z = s.normal();
            m1 += z;
            m2 += z * z;
        }
        m1 /= n as f64;
        m2 /= n as f64;
        assert!(m1.abs() < 0.01, "mean {m1}");
        assert!((m2 - 1.0).abs() < 0.02, "second moment {m2}");
    }

    #[test]
    fn haar_vector_is_normalized() {
        let mut s = GaussianStream::new(9, sample_stream_id(0));
        let v = s.haar_unit_vector(37);
        let n: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-12);
    }
}
