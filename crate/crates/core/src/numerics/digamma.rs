use num_complex::Complex64;
use std::f64::consts::PI;

use super::{cot_pi, nonpositive_integer};
use crate::error::{Error, Result};

/// `B_{2k} / (2k)` for k = 1..=7.
const ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// Digamma ψ(x) = Γ'(x)/Γ(x).
///
/// Reflects into `Re(x) ≥ 1/2`, recurs upward to `Re(x) ≥ 10`, then applies
/// the asymptotic expansion. Pole errors at `x = -n` carry residue `-1`.
pub fn digamma(x: Complex64) -> Result<Complex64> {
    if let Some(n) = nonpositive_integer(x) {
        return Err(Error::Pole {
            pole_index: n as i64,
            residue: Some(Complex64::new(-1.0, 0.0)),
        });
    }
    if x.re < 0.5 {
        // ψ(x) = ψ(1-x) - π cot(πx)
        return Ok(digamma(Complex64::new(1.0, 0.0) - x)? - PI * cot_pi(x));
    }
    let mut x = x;
    let mut shift = Complex64::new(0.0, 0.0);
    while x.re < 10.0 {
        shift -= x.inv();
        x += 1.0;
    }
    let inv2 = (x * x).inv();
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for c in ASYMPTOTIC {
        series += pow * c;
        pow *= inv2;
    }
    Ok(shift + x.ln() - 0.5 * x.inv() - series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EULER_GAMMA;
    use std::f64::consts::LN_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    // Partial sums of 1/x + Σ (1/(x+n) - log((n+1)/n)) at n = N, 2N, 4N, 8N,
    // Richardson-extrapolated in 1/N (the remainder has a pure 1/N expansion).
    fn oracle_minus_digamma(x: f64) -> f64 {
        let levels = [125_000usize, 250_000, 500_000, 1_000_000];
        let terms: Vec<f64> = (1..=levels[levels.len() - 1])
            .map(|n| 1.0 / (x + n as f64) - (1.0 / n as f64).ln_1p())
            .collect();
        // sum smallest terms first so rounding stays near eps
        let mut partial: Vec<f64> = levels
            .iter()
            .map(|&l| terms[..l].iter().rev().sum::<f64>() + 1.0 / x)
            .collect();
        for k in 1..partial.len() {
            for j in (k..partial.len()).rev() {
                let f = 2f64.powi(k as i32);
                partial[j] = (f * partial[j] - partial[j - 1]) / (f - 1.0);
            }
        }
        partial[partial.len() - 1]
    }

    #[test]
    fn spot_values() {
        assert!((digamma(c(1.0)).unwrap().re + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(c(2.0)).unwrap().re - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        let half = digamma(c(0.5)).unwrap().re;
        let closed = -EULER_GAMMA - 2.0 * LN_2;
        assert!((half - closed).abs() < 1e-14);
        assert!((half + oracle_minus_digamma(0.5)).abs() < 1e-12);
    }

    #[test]
    fn reflection_region() {
        // ψ(-0.5) = ψ(0.5) + 2
        let v = digamma(c(-0.5)).unwrap();
        assert!((v.re - (digamma(c(0.5)).unwrap().re + 2.0)).abs() < 1e-13);
        let z = Complex64::new(-3.3, 0.7);
        let lhs = digamma(z + 1.0).unwrap() - digamma(z).unwrap();
        assert!((lhs - z.inv()).norm() < 1e-12);
    }

    #[test]
    fn poles() {
        assert!(matches!(
            digamma(c(-2.0)),
            Err(Error::Pole { pole_index: 2, .. })
        ));
    }
}
