//! The generalized Euler constant γ(x) by two independent limit forms.

use num_complex::Complex64;

use super::{hurwitz_zeta, nonpositive_integer, CompensatedSum};
use crate::error::{Error, Result};
use crate::policy::{EvalResult, Method, TruncationPolicy};

fn pole(x: Complex64) -> Result<()> {
    match nonpositive_integer(x) {
        Some(n) => Err(Error::Pole {
            pole_index: n as i64,
            residue: Some(Complex64::new(1.0, 0.0)),
        }),
        None => Ok(()),
    }
}

/// Enough direct terms that the zeta-tail expansion ratio `|x|/N` is ≤ 1/4.
pub(crate) fn terms_for(x: Complex64, policy: &TruncationPolicy) -> usize {
    policy.max_terms.max((4.0 * x.norm()).ceil() as usize + 16)
}

/// γ(x) = 1/x + Σ_{n≥1} (1/(x+n) − log((n+1)/n)).
///
/// The remainder after `N` terms is
/// `Σ_{j≥1} (-1)^j ζ(j+1, N+1) (x^j − 1/(j+1))`, of which `tail_order`
/// terms are added; twice the first omitted one is the truncation estimate.
pub fn euler_gamma_x(x: Complex64, policy: &TruncationPolicy) -> Result<EvalResult> {
    policy.validate()?;
    pole(x)?;
    let n_terms = terms_for(x, policy);
    let mut acc = CompensatedSum::new();
    acc.add(x.inv());
    for n in 1..=n_terms {
        let a = (x + n as f64).inv();
        let b = (1.0 / n as f64).ln_1p();
        acc.add_with_magnitude(a - b, a.norm() + b);
    }

    let anchor = Complex64::new(n_terms as f64 + 1.0, 0.0);
    let mut x_pow = Complex64::new(1.0, 0.0);
    let mut tail = Complex64::new(0.0, 0.0);
    let mut omitted = 0.0;
    for j in 1..=policy.tail_order + 1 {
        x_pow *= x;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let zeta = hurwitz_zeta(j as u32 + 1, anchor)?;
        let t = zeta * sign * (x_pow - 1.0 / (j as f64 + 1.0));
        if j <= policy.tail_order {
            tail += t;
        } else {
            omitted = t.norm();
        }
    }
    let value = acc.value() + tail;
    let rounding = 8.0 * f64::EPSILON * (acc.abs_sum() + value.norm());
    Ok(EvalResult {
        value,
        err_estimate: (2.0 * omitted + rounding) / value.norm().max(1.0),
        method: Method::PartialSum,
        terms_used: n_terms,
    })
}

/// Zeroth Stieltjes constant γ₀(x) = lim (Σ_{k=0}^{n} 1/(x+k) − log(n+x)).
///
/// The remainder after `N` is `−Σ_{j≥2} ζ(j, x+N+1)/j`.
pub fn stieltjes_zeroth(x: Complex64, policy: &TruncationPolicy) -> Result<EvalResult> {
    policy.validate()?;
    pole(x)?;
    let n_terms = terms_for(x, policy);
    let mut acc = CompensatedSum::new();
    for k in (0..=n_terms).rev() {
        acc.add((x + k as f64).inv());
    }
    let log_end = (x + n_terms as f64).ln();
    acc.add(-log_end);

    let anchor = x + (n_terms as f64 + 1.0);
    let mut tail = Complex64::new(0.0, 0.0);
    let mut omitted = 0.0;
    for j in 2..=policy.tail_order + 2 {
        let t = -hurwitz_zeta(j as u32, anchor)? / j as f64;
        if j <= policy.tail_order + 1 {
            tail += t;
        } else {
            omitted = t.norm();
        }
    }
    let value = acc.value() + tail;
    let rounding = 8.0 * f64::EPSILON * (acc.abs_sum() + value.norm());
    Ok(EvalResult {
        value,
        err_estimate: (2.0 * omitted + rounding) / value.norm().max(1.0),
        method: Method::StieltjesLimit,
        terms_used: n_terms + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::digamma;
    use crate::EULER_GAMMA;
    use std::f64::consts::LN_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn spot_values() {
        let p = TruncationPolicy::default();
        let g1 = euler_gamma_x(c(1.0), &p).unwrap();
        assert!((g1.value.re - EULER_GAMMA).abs() < 1e-14);
        let g2 = euler_gamma_x(c(2.0), &p).unwrap();
        assert!((g2.value.re - (EULER_GAMMA - 1.0)).abs() < 1e-14);
        let gh = euler_gamma_x(c(0.5), &p).unwrap();
        assert!((gh.value.re - 1.963_510_026_021_423).abs() < 1e-14);
        assert!((gh.value.re - (EULER_GAMMA + 2.0 * LN_2)).abs() < 1e-14);
    }

    #[test]
    fn stieltjes_spot_values() {
        let p = TruncationPolicy::default();
        let s1 = stieltjes_zeroth(c(1.0), &p).unwrap();
        assert!((s1.value.re - EULER_GAMMA).abs() < 1e-14);
        let s2 = stieltjes_zeroth(c(2.0), &p).unwrap();
        assert!((s2.value.re - (EULER_GAMMA - 1.0)).abs() < 1e-14);
        let s3 = stieltjes_zeroth(c(1.5), &p).unwrap();
        assert!((s3.value.re - (EULER_GAMMA + 2.0 * LN_2 - 2.0)).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_digamma_off_axis() {
        let p = TruncationPolicy::default();
        for &x in &[
            Complex64::new(-3.4, 0.2),
            Complex64::new(7.5, -6.0),
            Complex64::new(0.01, 0.01),
            Complex64::new(19.0, 5.0),
        ] {
            let g = euler_gamma_x(x, &p).unwrap();
            let s = stieltjes_zeroth(x, &p).unwrap();
            let psi = digamma(x).unwrap();
            assert!((g.value + psi).norm() < 1e-12, "x={x}");
            let scale = g.value.norm().max(1.0);
            assert!(
                (g.value - s.value).norm() <= (g.err_estimate + s.err_estimate) * scale,
                "x={x}"
            );
        }
    }

    #[test]
    fn poles() {
        let p = TruncationPolicy::default();
        assert!(matches!(
            euler_gamma_x(c(-4.0), &p),
            Err(Error::Pole { pole_index: 4, .. })
        ));
        assert!(matches!(
            stieltjes_zeroth(c(0.0), &p),
            Err(Error::Pole { pole_index: 0, .. })
        ));
    }

    #[test]
    fn shallow_tail_reports_larger_error() {
        let x = c(6.0);
        let shallow = TruncationPolicy::default()
            .with_max_terms(100)
            .with_tail_order(0);
        let r = euler_gamma_x(x, &shallow).unwrap();
        let exact = -digamma(x).unwrap();
        let actual = (r.value - exact).norm();
        assert!(actual > 1e-4);
        assert!(actual <= r.err_estimate * r.value.norm().max(1.0));
    }
}
