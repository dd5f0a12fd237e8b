use num_complex::Complex64;

use crate::error::{Error, Result};

/// `B_{2k} / (2k)!` for k = 1..=7. The last entry only feeds the error estimate.
const BERNOULLI_OVER_FACTORIAL: [f64; 7] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
];

/// Hurwitz zeta `ζ(m, x) = Σ_{n≥0} (n+x)^{-m}` for integer `m ≥ 2`, `Re(x) > 0`.
pub fn hurwitz_zeta(m: u32, x: Complex64) -> Result<Complex64> {
    hurwitz_zeta_with_err(m, x).map(|(v, _)| v)
}

/// [`hurwitz_zeta`] together with a relative error estimate.
///
/// Sums `N = ⌈max(16, |Im x|)⌉` terms directly and corrects the remainder
/// with Euler–Maclaurin through `B₁₂`; the `B₁₄` term is the error estimate.
pub fn hurwitz_zeta_with_err(m: u32, x: Complex64) -> Result<(Complex64, f64)> {
    if m < 2 {
        return Err(Error::domain(format!("hurwitz_zeta needs m >= 2, got {m}")));
    }
    if !(x.re > 0.0) || !x.im.is_finite() {
        return Err(Error::domain(format!(
            "hurwitz_zeta needs Re(x) > 0, got {}",
            super::fmt_complex(x)
        )));
    }
    let n = 16f64.max(x.im.abs()).ceil() as usize;
    let s = m as f64;
    let u = x + n as f64;
    let inv_u = u.inv();
    let inv_u2 = inv_u * inv_u;
    let u_pow = inv_u.powu(m);

    // Euler–Maclaurin remainder, accumulated smallest first.
    let mut corr = [Complex64::new(0.0, 0.0); 7];
    // (s)_{2k-1} u^{-s-2k+1}, starting at k=1
    let mut rising = u_pow * inv_u * s;
    for (k, c) in corr.iter_mut().enumerate() {
        *c = rising * BERNOULLI_OVER_FACTORIAL[k];
        let a = s + (2 * k + 1) as f64;
        rising *= inv_u2 * (a * (a + 1.0));
    }
    let err_term = corr[6].norm();
    let mut tail = Complex64::new(0.0, 0.0);
    for c in corr[..6].iter().rev() {
        tail += c;
    }
    tail += u_pow * 0.5;
    tail += u_pow * u / (s - 1.0);

    let mut acc = tail;
    for k in (0..n).rev() {
        acc += (x + k as f64).inv().powu(m);
    }
    let rel = (err_term + 4.0 * f64::EPSILON * acc.norm()) / acc.norm();
    Ok((acc, rel))
}

/// Riemann zeta `ζ(m) = ζ(m, 1)` for integer `m ≥ 2`.
pub fn riemann_zeta(m: u32) -> Result<f64> {
    hurwitz_zeta(m, Complex64::new(1.0, 0.0)).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    // Direct summation to `terms` plus the integral tail bound (x+T)^{1-m}/(m-1)
    // and the half-term correction.
    fn brute_force(m: i32, x: f64, terms: usize) -> f64 {
        let mut s = 0.0;
        for n in (0..terms).rev() {
            s += (n as f64 + x).powi(-m);
        }
        let u = terms as f64 + x;
        s + u.powi(1 - m) / (m - 1) as f64 + 0.5 * u.powi(-m)
    }

    #[test]
    fn riemann_values() {
        assert!((riemann_zeta(2).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((riemann_zeta(4).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        let z3 = brute_force(3, 1.0, 10_000_000);
        assert!((z3 - 1.202_056_903_159_594).abs() < 1e-15);
        assert!((riemann_zeta(3).unwrap() - z3).abs() < 1e-15);
    }

    #[test]
    fn hurwitz_examples() {
        let z21 = hurwitz_zeta(2, c(1.0)).unwrap();
        assert!((z21.re - 1.644_934_066_848_226).abs() < 1e-15);
        let z22 = hurwitz_zeta(2, c(2.0)).unwrap();
        assert!((z22.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-15);
        let oracle = brute_force(3, 0.5, 10_000_000);
        assert!((oracle - 8.414_398_322_117_16).abs() < 1e-13);
        let v = hurwitz_zeta(3, c(0.5)).unwrap();
        assert!((v.re - oracle).abs() < 1e-13);
        assert!((v.re - 7.0 * riemann_zeta(3).unwrap()).abs() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(hurwitz_zeta(1, c(1.0)), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(2, c(0.0)), Err(Error::Domain(_))));
        assert!(matches!(
            hurwitz_zeta(2, Complex64::new(-0.5, 3.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn telescoping_shift() {
        for &x in &[
            Complex64::new(0.3, 0.0),
            Complex64::new(1.7, -2.5),
            Complex64::new(0.05, 30.0),
            Complex64::new(12.0, 4.0),
        ] {
            for m in 2..=8 {
                let d = hurwitz_zeta(m, x).unwrap() - hurwitz_zeta(m, x + 1.0).unwrap();
                let expect = x.inv().powu(m);
                assert!(
                    (d - expect).norm() <= 1e-12 * expect.norm().max(1.0),
                    "m={m} x={x}"
                );
            }
        }
    }

    #[test]
    fn large_orders_stay_accurate() {
        // ζ(40, 1) = 1 + 2^-40 + …
        let v = hurwitz_zeta(40, c(1.0)).unwrap().re;
        assert!((v - (1.0 + 2f64.powi(-40) + 3f64.powi(-40))).abs() < 1e-16);
        let (_, err) = hurwitz_zeta_with_err(64, c(0.7)).unwrap();
        assert!(err < 1e-14);
    }
}
