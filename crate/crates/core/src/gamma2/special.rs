use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{fmt_complex, nonpositive_integer, pochhammer, rgamma_classical};

/// Residue of Γ(x,·) at the pole `z = -(x+m)`, `m ≥ -1`:
/// `1/Γ(x)` for `m = -1`, otherwise
/// `(-1)^{m+1} (x)_{2m+1} / ((m+1)! Γ(x+2m+1))`.
///
/// Positive integer `x` is accepted; the formula is continuous there and at
/// `x = 1` gives the classical residues of Γ.
pub fn residue_at(x: Complex64, m: i64) -> Result<Complex64> {
    if m < -1 {
        return Err(Error::Argument(format!("pole index must be ≥ -1, got {m}")));
    }
    if nonpositive_integer(x).is_some() {
        return Err(Error::domain(format!(
            "residues need x outside the nonpositive integers, got x={}",
            fmt_complex(x)
        )));
    }
    if m == -1 {
        return rgamma_classical(x);
    }
    let m = m as u32;
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    let fact: f64 = (1..=m + 1).map(f64::from).product();
    let poch = pochhammer(x, 2 * m + 1)?;
    Ok(poch * rgamma_classical(x + (2 * m + 1) as f64)? * (sign / fact))
}

fn factorial(n: i64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Closed form of `Γ((2k+1)/2, (2l+1)/2)`:
/// `2/(√π (2k−1)) · (2l+2)!/((−4)^{l+1} (l+1)!) · (k+l−1)!/(−l−1/2)_{k+l}`.
pub fn half_integer_value(k: i64, l: i64) -> Result<f64> {
    if k < 0 || l < 0 || k + l == 0 {
        return Err(Error::Argument(format!(
            "half-integer values need k, l ≥ 0 with k + l ≥ 1, got k={k}, l={l}"
        )));
    }
    let lead = 2.0 / (PI.sqrt() * (2 * k - 1) as f64);
    let middle = factorial(2 * l + 2) / ((-4f64).powi(l as i32 + 1) * factorial(l + 1));
    let poch: f64 = (0..k + l).map(|j| -(l as f64) - 0.5 + j as f64).product();
    let value = lead * middle * factorial(k + l - 1) / poch;
    if !value.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(value)
}

/// `|Γ(n+i, n+i)|²` two ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianNorm {
    pub n: u32,
    /// From the base value by `Γ(x+1,z+1) = ((z+x−1)(z+x)/x) Γ(x,z)`.
    pub recurrence: f64,
    /// `5 ∏_{k=0}^{2n−2} (4+k²) / ∏_{k=0}^{n−1} (1+k²)` times the base value.
    pub closed_product: f64,
}

/// `|Γ(i,i)|² = e^π / (10 (e^{2π} + 1))`.
pub fn gaussian_norm_base() -> f64 {
    PI.exp() / (10.0 * ((2.0 * PI).exp() + 1.0))
}

pub fn gaussian_norm(n: u32) -> GaussianNorm {
    let base = gaussian_norm_base();
    let mut recurrence = base;
    for j in 0..n {
        let w = Complex64::new(j as f64, 1.0);
        recurrence *= ((2.0 * w - 1.0) * (2.0 * w) / w).norm_sqr();
    }
    let num: f64 = (0..2 * n as i64 - 1)
        .map(|k| 4.0 + (k * k) as f64)
        .product();
    let den: f64 = (0..n as i64).map(|k| 1.0 + (k * k) as f64).product();
    GaussianNorm {
        n,
        recurrence,
        closed_product: 5.0 * num / den * base,
    }
}
