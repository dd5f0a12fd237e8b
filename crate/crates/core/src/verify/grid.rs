use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::gamma2::pole_distance;

/// Minimum distance between a sample point and any pole of a Γ factor.
pub const POLE_MARGIN: f64 = 0.1;

const MAX_ATTEMPTS: usize = 1_000_000;

/// Deterministic per-identity sampler: the stream depends only on the seed
/// and the identity id.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, id: &str) -> Self {
        // FNV-1a keeps the id mixing stable across toolchains.
        let h = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
        });
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ h),
        }
    }

    pub fn real(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Uniform in the disc `|w| ≤ radius`.
    pub fn disc(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.rng.random::<f64>().sqrt();
        let t = 2.0 * PI * self.rng.random::<f64>();
        Complex64::from_polar(r, t)
    }

    /// Uniform in `[re_lo, re_hi] × [-im, im]`.
    pub fn rect(&mut self, re_lo: f64, re_hi: f64, im: f64) -> Complex64 {
        let re = self.real(re_lo, re_hi);
        let im = if im > 0.0 { self.real(-im, im) } else { 0.0 };
        Complex64::new(re, im)
    }

    /// Draws `n` points from `draw`, keeping those `accept` admits.
    pub fn points<F, A>(&mut self, n: usize, mut draw: F, accept: A) -> Vec<Vec<Complex64>>
    where
        F: FnMut(&mut Self) -> Vec<Complex64>,
        A: Fn(&[Complex64]) -> bool,
    {
        let mut out = Vec::with_capacity(n);
        let mut attempts = 0;
        while out.len() < n && attempts < MAX_ATTEMPTS {
            attempts += 1;
            let p = draw(self);
            if accept(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Every listed `(x, z)` pair is at least [`POLE_MARGIN`] from the singular
/// set of Γ(x,·) and from `x ∈ {0, -1, …}`.
pub fn clear_of_poles(pairs: &[(Complex64, Complex64)]) -> bool {
    pairs
        .iter()
        .all(|&(x, z)| pole_distance(x, z) >= POLE_MARGIN)
}

/// Distance from `w` to the nearest integer.
pub fn integer_distance(w: Complex64) -> f64 {
    (w - w.re.round()).norm()
}

/// `w` is at least `margin` away from `{0, -1, -2, …}`.
pub fn clear_of_nonpositive(w: Complex64, margin: f64) -> bool {
    (w - w.re.round().min(0.0)).norm() >= margin
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_id_dependent() {
        let a: Vec<f64> = (0..5)
            .map(|_| Sampler::new(42, "FE-z").real(0.0, 1.0))
            .collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut s1 = Sampler::new(42, "FE-z");
        let mut s2 = Sampler::new(42, "FE-x");
        assert_ne!(s1.real(0.0, 1.0), s2.real(0.0, 1.0));
    }

    #[test]
    fn disc_and_filters() {
        let mut s = Sampler::new(7, "disc");
        let pts = s.points(
            500,
            |s| vec![s.disc(2.0), s.disc(2.0)],
            |p| clear_of_poles(&[(p[0], p[1])]),
        );
        assert_eq!(pts.len(), 500);
        for p in &pts {
            assert!(p[0].norm() <= 2.0 && p[1].norm() <= 2.0);
            assert!(pole_distance(p[0], p[1]) >= POLE_MARGIN);
        }
        assert!(clear_of_nonpositive(Complex64::new(0.5, 0.0), 0.1));
        assert!(!clear_of_nonpositive(Complex64::new(-2.05, 0.0), 0.1));
        assert!(clear_of_nonpositive(Complex64::new(3.0, 0.0), 0.1));
        assert!((integer_distance(Complex64::new(2.9, 0.0)) - 0.1).abs() < 1e-12);
    }
}
