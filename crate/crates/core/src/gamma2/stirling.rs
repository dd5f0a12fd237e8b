use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{classify, LogGamma};
use crate::error::{Error, Result};
use crate::numerics::hurwitz_zeta;
use crate::policy::{EvalResult, Method, TruncationPolicy};

/// Pieces of `log Γ(x,z) = main_term + I(x) − I(z+x−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StirlingParts {
    /// `(z+x−3/2) log(z+x−1) − z + 1 − (x−1/2) log x`
    pub main_term: Complex64,
    pub i_x: f64,
    pub i_zx: f64,
    /// Absolute error bound on the recombined logarithm.
    pub err_estimate: f64,
}

impl StirlingParts {
    pub fn log_value(&self) -> Complex64 {
        self.main_term + (self.i_x - self.i_zx)
    }
}

fn c_k(k: u32) -> f64 {
    1.0 / (k as f64 + 1.0) - 1.0 / (2.0 * k as f64)
}

/// `∫_0^1 P(t)/(a+t) dt = 1 − (a+1/2) log(1+1/a)`.
fn interval(a: f64) -> f64 {
    if a < 8.0 {
        return 1.0 - (a + 0.5) * (1.0 / a).ln_1p();
    }
    // −Σ_{k≥2} (−1)^k c_k a^{−k}
    let u = 1.0 / a;
    let mut pow = -u;
    let mut s = 0.0;
    for k in 2..64 {
        pow *= -u;
        let t = c_k(k) * pow;
        s += t;
        if t.abs() < 1e-18 * s.abs() {
            break;
        }
    }
    -s
}

/// `I(z) = ∫_0^∞ P(t)/(z+t) dt` with `P(t) = t − ⌊t⌋ − 1/2`, and an absolute
/// error bound. Unit intervals are summed in closed form up to the policy's
/// term count; the rest is `−Σ_{k≥2} (−1)^k c_k ζ(k, z+N)`.
pub fn i_integral_with_err(z: f64, policy: &TruncationPolicy) -> Result<(f64, f64)> {
    policy.validate()?;
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("I(z) needs z > 0, got {z}")));
    }
    let n_terms = policy.max_terms;
    let mut s = 0.0;
    let mut comp = 0.0;
    let mut abs_sum = 0.0;
    for n in (0..n_terms).rev() {
        let t = interval(z + n as f64);
        abs_sum += t.abs();
        let y = s + t;
        comp += if s.abs() >= t.abs() {
            (s - y) + t
        } else {
            (t - y) + s
        };
        s = y;
    }
    let anchor = Complex64::new(z + n_terms as f64, 0.0);
    let mut tail = 0.0;
    let mut omitted = 0.0;
    for k in 2..=policy.tail_order as u32 + 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let t = -sign * c_k(k) * hurwitz_zeta(k, anchor)?.re;
        if k <= policy.tail_order as u32 + 1 {
            tail += t;
        } else {
            omitted = 2.0 * t.abs();
        }
    }
    let value = s + comp + tail;
    Ok((
        value,
        omitted + 8.0 * f64::EPSILON * (abs_sum + value.abs()),
    ))
}

pub fn i_integral(z: f64, policy: &TruncationPolicy) -> Result<f64> {
    i_integral_with_err(z, policy).map(|(v, _)| v)
}

/// The exact Stirling-type decomposition of `log Γ(x,z)` for real `x > 0`,
/// `z > 0` with `z + x − 1 > 0`.
pub fn gamma_stirling_log(x: f64, z: f64, policy: &TruncationPolicy) -> Result<StirlingParts> {
    if !(x > 0.0 && z > 0.0 && z + x - 1.0 > 0.0) || !(x.is_finite() && z.is_finite()) {
        return Err(Error::domain(format!(
            "the Stirling formula needs real x > 0, z > 0, z + x > 1 (got x={x}, z={z})"
        )));
    }
    let s = z + x - 1.0;
    let a = (z + x - 1.5) * s.ln();
    let b = (x - 0.5) * x.ln();
    let main = a - z + 1.0 - b;
    let (i_x, ex) = i_integral_with_err(x, policy)?;
    let (i_zx, ez) = i_integral_with_err(s, policy)?;
    Ok(StirlingParts {
        main_term: Complex64::new(main, 0.0),
        i_x,
        i_zx,
        err_estimate: ex + ez + 4.0 * f64::EPSILON * (a.abs() + z + 1.0 + b.abs()),
    })
}

/// Γ(x,z) for real positive arguments from the exact Stirling formula.
pub fn gamma_stirling(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<EvalResult> {
    if x.im != 0.0 || z.im != 0.0 {
        return Err(Error::domain(
            "the Stirling path is restricted to real arguments",
        ));
    }
    classify(x, z).ensure_clean(x, z)?;
    let parts = gamma_stirling_log(x.re, z.re, policy)?;
    LogGamma {
        log: parts.log_value(),
        err: parts.err_estimate,
        terms: 2 * policy.max_terms,
    }
    .into_result(Method::Stirling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma2::gamma_weierstrass;

    fn p() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    // Composite Gauss–Legendre (5 nodes) on [0,1] split into 64 panels.
    fn quad(f: impl Fn(f64) -> f64) -> f64 {
        let nodes = [
            (0.0, 0.568_888_888_888_888_9),
            (0.538_469_310_105_683, 0.478_628_670_499_366_5),
            (-0.538_469_310_105_683, 0.478_628_670_499_366_5),
            (0.906_179_845_938_664, 0.236_926_885_056_189_1),
            (-0.906_179_845_938_664, 0.236_926_885_056_189_1),
        ];
        let panels = 64;
        let h = 1.0 / panels as f64;
        let mut s = 0.0;
        for i in 0..panels {
            let mid = (i as f64 + 0.5) * h;
            for (t, w) in nodes {
                s += w * 0.5 * h * f(mid + 0.5 * h * t);
            }
        }
        s
    }

    #[test]
    fn interval_closed_form_matches_quadrature() {
        let q = quad(|t| (t - 0.5) / (1.0 + t));
        assert!((q - (1.0 - 1.5 * 2f64.ln())).abs() < 1e-15);
        assert!((interval(1.0) - q).abs() < 1e-15);
        assert!((interval(1.0) + 0.039_720_770_839_918).abs() < 1e-14);
        for a in [7.9, 8.0, 8.1, 30.0] {
            let q = quad(|t| (t - 0.5) / (a + t));
            assert!((interval(a) - q).abs() < 1e-15, "{a}");
        }
    }

    #[test]
    fn i_values() {
        let i1 = i_integral(1.0, &p()).unwrap();
        assert!((i1 - (0.5 * (2.0 * std::f64::consts::PI).ln() - 1.0)).abs() < 1e-14);
        assert!((i1 + 0.081_061_466_795_327).abs() < 1e-14);
        let big = i_integral(1e6, &p()).unwrap();
        assert!(big.abs() < 1e-7);
        assert!((big + 1.0 / 12e6).abs() < 1e-15);
        assert!(i_integral(0.0, &p()).is_err());
        assert!(i_integral(-1.0, &p()).is_err());
    }

    #[test]
    fn tail_bound_without_corrections() {
        let pol = p().with_tail_order(0).with_max_terms(100);
        let (v, err) = i_integral_with_err(2.0, &pol).unwrap();
        let exact = i_integral(2.0, &p()).unwrap();
        assert!((v - exact).abs() <= err);
    }

    #[test]
    fn exact_identity() {
        let l = gamma_stirling_log(1.0, 1.0, &p()).unwrap().log_value();
        assert!(l.norm() < 1e-10);
        let l = gamma_stirling_log(3.0, 4.0, &p()).unwrap().log_value();
        assert!((l.re - 60f64.ln()).abs() < 1e-10);
        let l = gamma_stirling_log(7.3, 2.9, &p()).unwrap().log_value();
        let w = gamma_weierstrass(Complex64::new(7.3, 0.0), Complex64::new(2.9, 0.0), &p())
            .unwrap()
            .value;
        assert!((l.re - w.re.ln()).abs() < 1e-9);
        assert!(gamma_stirling_log(0.5, 0.4, &p()).is_err());
    }
}
