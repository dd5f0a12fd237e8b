//! Taylor expansions of Γ(x,z) around `z = 0` (of `Γ(x,z+1)`) and around
//! `x = 1` (of `Γ(x+1,z)`), with coefficients generated by matching the
//! derivative of the logarithmic series.
//!
//! The `paper_literal` switches reproduce two printed variants of the
//! recursions that disagree with the logarithmic derivative: a sign `(-1)^m`
//! in place of `(-1)^{m-k}` in the z-recursion, and in the x-direction a
//! linear coefficient `Σ_{n≥2} z/(n(n+z))` that is added instead of
//! multiplied and lacks the `−1/(z+1)` contribution.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    digamma, euler_gamma_x, fmt_complex, hurwitz_zeta, log1p, riemann_zeta, CompensatedSum,
};
use crate::policy::TruncationPolicy;
use crate::EULER_GAMMA;

/// Default number of coefficients beyond the constant term.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterVariable {
    /// `Γ(x, z+1) = Σ a_m(x) z^m`
    ZAt1,
    /// `Γ(x+1, z) = Σ b_m(z) (x−1)^m`
    XAt1,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesExpansion {
    pub center_variable: CenterVariable,
    /// The variable held fixed.
    pub anchor: Complex64,
    pub coefficients: Vec<Complex64>,
    pub radius_hint: f64,
}

impl SeriesExpansion {
    /// Horner evaluation at offset `h` from the center.
    pub fn evaluate(&self, h: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * h + c)
    }
}

fn require_right_half(name: &str, v: Complex64) -> Result<()> {
    if v.re > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "series anchor needs Re({name}) > 0, got {name}={}",
            fmt_complex(v)
        )))
    }
}

/// `log Γ(x,z+1) ≈ −zγ(x) + Σ_{m=2}^{M} (−1)^m ζ(m,x) z^m / m`,
/// valid for `|z| < min(1,|x|)`.
pub fn log_series_in_z(
    x: Complex64,
    z: Complex64,
    order: usize,
    policy: &TruncationPolicy,
) -> Result<Complex64> {
    require_right_half("x", x)?;
    let r = x.norm().min(1.0);
    if z.norm() >= r {
        return Err(Error::domain(format!(
            "z-series needs |z| < min(1,|x|) = {r}, got |z| = {}",
            z.norm()
        )));
    }
    let gamma = euler_gamma_x(x, policy)?.value;
    let mut sum = -z * gamma;
    let mut z_pow = z;
    for m in 2..=order.max(1) {
        z_pow *= z;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sum += z_pow * hurwitz_zeta(m as u32, x)? * (sign / m as f64);
    }
    Ok(sum)
}

/// Coefficients `a_0..a_M` of `Γ(x,z+1) = Σ a_m(x) z^m` from
/// `m a_m = −γ(x) a_{m−1} + Σ_{k=0}^{m−2} (−1)^{m−k} ζ(m−k,x) a_k`.
pub fn coeffs_a(
    x: Complex64,
    order: usize,
    paper_literal: bool,
    policy: &TruncationPolicy,
) -> Result<SeriesExpansion> {
    require_right_half("x", x)?;
    let gamma = euler_gamma_x(x, policy)?.value;
    let zetas = (2..=order.max(2))
        .map(|j| hurwitz_zeta(j as u32, x))
        .collect::<Result<Vec<_>>>()?;
    let mut a = vec![Complex64::new(1.0, 0.0)];
    for m in 1..=order {
        let mut s = -gamma * a[m - 1];
        for k in 0..m.saturating_sub(1) {
            let j = m - k;
            let p = if paper_literal { m } else { j };
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            s += zetas[j - 2] * a[k] * sign;
        }
        a.push(s / m as f64);
    }
    Ok(SeriesExpansion {
        center_variable: CenterVariable::ZAt1,
        anchor: x,
        coefficients: a,
        radius_hint: x.norm().min(1.0),
    })
}

/// `Σ_{n≥1} (z log((n+1)/n) − log((z+n)/n)) = log(zΓ(z))`, summed with the
/// zeta tail `Σ_{j≥2} (−1)^{j−1} (z − z^j) ζ(j, N+1) / j`.
pub fn log_z_gamma_z(z: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    policy.validate()?;
    require_right_half("z", z)?;
    let n_terms = policy.max_terms.max((4.0 * z.norm()).ceil() as usize + 16);
    let mut acc = CompensatedSum::new();
    for n in (1..=n_terms).rev() {
        let a = z * (1.0 / n as f64).ln_1p();
        let b = log1p(z / n as f64);
        acc.add_with_magnitude(a - b, a.norm() + b.norm());
    }
    let anchor = Complex64::new(n_terms as f64 + 1.0, 0.0);
    let mut tail = Complex64::new(0.0, 0.0);
    let mut z_pow = z;
    for j in 2..=policy.tail_order.max(1) + 1 {
        z_pow *= z;
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        tail += (z - z_pow) * hurwitz_zeta(j as u32, anchor)? * (sign / j as f64);
    }
    Ok(acc.value() + tail)
}

/// Linear coefficient of `log Γ(x+1,z)` in `x − 1`.
///
/// The derivative-matching value is `ψ(z+1) + γ − 1`; the literal value is
/// `Σ_{n≥2} z/(n(n+z)) = ψ(z+1) + γ − 1 + 1/(z+1)`.
pub fn linear_coefficient(z: Complex64, paper_literal: bool) -> Result<Complex64> {
    require_right_half("z", z)?;
    let one = Complex64::new(1.0, 0.0);
    let base = match digamma(z + 1.0) {
        Ok(psi) => psi + EULER_GAMMA - 1.0,
        Err(_) => linear_coefficient_partial_sum(z, 1_000_000) - (one + z).inv(),
    };
    Ok(if paper_literal {
        base + (one + z).inv()
    } else {
        base
    })
}

/// `Σ_{n=2}^{N} z/(n(n+z))`, the literal linear coefficient by direct
/// summation.
pub fn linear_coefficient_partial_sum(z: Complex64, terms: usize) -> Complex64 {
    let mut acc = CompensatedSum::new();
    for n in (2..=terms.max(2)).rev() {
        let n = n as f64;
        acc.add(z / (n * (z + n)));
    }
    acc.value()
}

fn x_series_terms(z: Complex64, order: usize) -> Result<Vec<Complex64>> {
    // d_m = ζ(m,z) − ζ(m) − z^{−m} + 1, m ≥ 2
    let zi = z.inv();
    let mut zi_pow = zi;
    (2..=order.max(2))
        .map(|m| {
            zi_pow *= zi;
            Ok(hurwitz_zeta(m as u32, z)? - riemann_zeta(m as u32)? - zi_pow + 1.0)
        })
        .collect()
}

/// `log Γ(x+1,z)` from its expansion in powers of `x − 1`:
/// `log(zΓ(z)) + c(z)(x−1) + Σ_{m=2}^{M} (−1)^m d_m(z) (x−1)^m / m`
/// with `d_m = ζ(m,z) − ζ(m) − z^{−m} + 1`, valid for `|x−1| < min(1,|z+1|)`.
pub fn log_series_in_x(
    x: Complex64,
    z: Complex64,
    order: usize,
    paper_literal: bool,
    policy: &TruncationPolicy,
) -> Result<Complex64> {
    require_right_half("z", z)?;
    let t = x - 1.0;
    let r = (z + 1.0).norm().min(1.0);
    if t.norm() >= r {
        return Err(Error::domain(format!(
            "x-series needs |x−1| < min(1,|z+1|) = {r}, got |x−1| = {}",
            t.norm()
        )));
    }
    let mut sum = log_z_gamma_z(z, policy)?;
    if order == 0 {
        return Ok(sum);
    }
    sum += linear_coefficient(z, paper_literal)? * t;
    let d = x_series_terms(z, order)?;
    let mut t_pow = t;
    for m in 2..=order {
        t_pow *= t;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sum += d[m - 2] * t_pow * (sign / m as f64);
    }
    Ok(sum)
}

/// Coefficients `b_0..b_M` of `Γ(x+1,z) = Σ b_m(z) (x−1)^m` from
/// `m b_m = c(z) b_{m−1} + Σ_{k=0}^{m−2} (−1)^{m−k} d_{m−k}(z) b_k`, with
/// `b_0 = zΓ(z)`.
///
/// With `paper_literal` the recursion is
/// `b_m = b_{m−1}/m + Σ_{n≥2} z/(n(n+z)) + (1/m) Σ_k …` instead.
pub fn coeffs_b(
    z: Complex64,
    order: usize,
    paper_literal: bool,
    policy: &TruncationPolicy,
) -> Result<SeriesExpansion> {
    require_right_half("z", z)?;
    let c = linear_coefficient(z, paper_literal)?;
    let d = x_series_terms(z, order)?;
    let mut b = vec![log_z_gamma_z(z, policy)?.exp()];
    for m in 1..=order {
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..m.saturating_sub(1) {
            let j = m - k;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            s += d[j - 2] * b[k] * sign;
        }
        let next = if paper_literal {
            b[m - 1] / m as f64 + c + s / m as f64
        } else {
            (c * b[m - 1] + s) / m as f64
        };
        b.push(next);
    }
    Ok(SeriesExpansion {
        center_variable: CenterVariable::XAt1,
        anchor: z,
        coefficients: b,
        radius_hint: (z + 1.0).norm().min(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma2::{gamma_weierstrass, gamma_xz};
    use crate::numerics::{gamma_classical, ln_gamma_classical};
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn p() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    // Taylor coefficients by the trapezoid rule on a circle of radius r.
    fn cauchy_coeffs(f: impl Fn(Complex64) -> Complex64, r: f64, count: usize) -> Vec<Complex64> {
        let k = 128;
        let samples: Vec<Complex64> = (0..k)
            .map(|j| f(Complex64::from_polar(r, 2.0 * PI * j as f64 / k as f64)))
            .collect();
        (0..count)
            .map(|m| {
                let s: Complex64 = samples
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        v * Complex64::from_polar(1.0, -2.0 * PI * (j * m) as f64 / k as f64)
                    })
                    .sum();
                s / (k as f64 * r.powi(m as i32))
            })
            .collect()
    }

    #[test]
    fn z_series_examples() {
        assert_eq!(log_series_in_z(c(1.0), c(0.0), 5, &p()).unwrap(), c(0.0));
        let v = log_series_in_z(c(1.0), c(0.5), 40, &p()).unwrap();
        assert!((v.re + 0.120_782_237_635_245).abs() < 1e-12);
        assert!((v.re - ln_gamma_classical(c(1.5)).unwrap().re).abs() < 1e-12);
        let v = log_series_in_z(c(2.0), c(0.3), 40, &p()).unwrap();
        let w = gamma_weierstrass(c(2.0), c(1.3), &p()).unwrap().value;
        assert!((v - w.ln()).norm() < 1e-10);
        assert!(log_series_in_z(c(0.5), c(0.6), 10, &p()).is_err());
        assert!(log_series_in_z(c(-0.5), c(0.1), 10, &p()).is_err());
    }

    #[test]
    fn a_coefficients() {
        let s = coeffs_a(c(1.0), 2, false, &p()).unwrap();
        assert_eq!(s.coefficients[0], c(1.0));
        assert!((s.coefficients[1].re + EULER_GAMMA).abs() < 1e-13);
        let a2 = (EULER_GAMMA * EULER_GAMMA + PI * PI / 6.0) / 2.0;
        assert!((a2 - 0.989_055_995_327_973).abs() < 1e-15);
        assert!((s.coefficients[2].re - a2).abs() < 1e-13);
        let x = Complex64::new(1.4, 0.3);
        let s = coeffs_a(x, 10, false, &p()).unwrap();
        let oracle = cauchy_coeffs(
            |z| gamma_classical(x + z).unwrap() / gamma_classical(x).unwrap(),
            0.5,
            11,
        );
        for (a, o) in s.coefficients.iter().zip(&oracle) {
            assert!((a - o).norm() < 1e-12, "{a} vs {o}");
        }
        // literal signs disagree from m = 3 on
        let lit = coeffs_a(x, 10, true, &p()).unwrap();
        assert!((lit.coefficients[2] - s.coefficients[2]).norm() < 1e-15);
        assert!((lit.coefficients[3] - s.coefficients[3]).norm() > 1e-3);
    }

    #[test]
    fn a_series_sums_to_gamma() {
        let s = coeffs_a(c(2.0), DEFAULT_ORDER, false, &p()).unwrap();
        let v = s.evaluate(c(0.3));
        let w = gamma_xz(c(2.0), c(1.3), &p()).unwrap().value;
        assert!((v - w).norm() < 1e-12);
    }

    #[test]
    fn linear_coefficient_forms() {
        for z in [c(1.0), c(1.5), Complex64::new(0.7, 2.0)] {
            let lit = linear_coefficient(z, true).unwrap();
            let direct = linear_coefficient_partial_sum(z, 2_000_000);
            // the partial sum misses ≈ z/(N+1)
            assert!((lit - direct - z / 2_000_001.0).norm() < 1e-11, "{z}");
        }
        assert!(linear_coefficient(c(1.0), false).unwrap().norm() < 1e-15);
        assert!((linear_coefficient(c(1.0), true).unwrap().re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn x_series_examples() {
        let v = log_series_in_x(c(1.0), c(2.0), 7, false, &p()).unwrap();
        assert!((v.re - 2f64.ln()).abs() < 1e-13 && v.im.abs() < 1e-15);
        let v = log_series_in_x(c(1.0), c(1.0), 1, false, &p()).unwrap();
        assert!(v.norm() < 1e-13);
        let w = gamma_weierstrass(c(2.2), c(1.5), &p()).unwrap().value.ln();
        let v = log_series_in_x(c(1.2), c(1.5), 40, false, &p()).unwrap();
        assert!((v - w).norm() < 1e-10);
        let lit = log_series_in_x(c(1.2), c(1.5), 40, true, &p()).unwrap();
        assert!(((lit - w).re - 0.2 / 2.5).abs() < 1e-10);
        assert!(log_series_in_x(c(2.1), c(1.5), 4, false, &p()).is_err());
    }

    #[test]
    fn b_coefficients() {
        // Γ(x+1, 1) ≡ 1
        let s = coeffs_b(c(1.0), 8, false, &p()).unwrap();
        assert!((s.coefficients[0] - 1.0).norm() < 1e-13);
        assert!(s.coefficients[1..].iter().all(|b| b.norm() < 1e-13));
        let lit = coeffs_b(c(1.0), 2, true, &p()).unwrap();
        assert!((lit.coefficients[1].re - 1.5).abs() < 1e-13);

        let z = c(1.5);
        let s = coeffs_b(z, 30, false, &p()).unwrap();
        let b0 = gamma_classical(c(2.5)).unwrap();
        assert!((s.coefficients[0] - b0).norm() < 1e-13);
        let w = gamma_weierstrass(c(2.2), z, &p()).unwrap().value;
        assert!((s.evaluate(c(0.2)) - w).norm() < 1e-8);
        let oracle = cauchy_coeffs(
            |t| gamma_classical(t + z + 1.0).unwrap() / gamma_classical(t + 2.0).unwrap(),
            0.5,
            8,
        );
        for (b, o) in s.coefficients.iter().zip(&oracle) {
            assert!((b - o).norm() < 1e-12, "{b} vs {o}");
        }
    }
}
