//! The Weierstrass-type product `G(x,z) = ∏_{n≥0} (1 + z/(n+x)) e^{-z/(n+x)}`
//! and the product identities it satisfies.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{
    cot_pi, euler_gamma_x, hurwitz_zeta, log1p, log1p_minus_w, near_integer, nonpositive_integer,
    sin_pi, CompensatedSum, LN_OVERFLOW_LIMIT,
};
use crate::policy::{EvalResult, Method, TruncationPolicy};

/// Zeta corrections for the part of `log G` beyond the summed terms:
/// `Σ_{n≥N} [log(1+z/(n+x)) − z/(n+x)] = Σ_{j≥2} (-1)^{j-1} z^j ζ(j, x+N) / j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductTail {
    pub terms_summed: usize,
    /// `−z² ζ(2, x+N) / 2`
    pub zeta2_correction: Complex64,
    /// `z³ ζ(3, x+N) / 3`
    pub zeta3_correction: Complex64,
    /// Sum of the `j ≥ 4` corrections included by the tail order.
    pub higher_corrections: Complex64,
    /// Bound on the corrections left out.
    pub omitted_bound: f64,
}

impl ProductTail {
    pub fn total(&self) -> Complex64 {
        self.zeta2_correction + self.zeta3_correction + self.higher_corrections
    }
}

/// Tail of `log G(x,z)` after `terms_summed` factors, using `tail_order`
/// corrections (`ζ₂`, `ζ₃`, …).
pub fn product_tail(
    x: Complex64,
    z: Complex64,
    terms_summed: usize,
    tail_order: usize,
) -> Result<ProductTail> {
    let anchor = x + terms_summed as f64;
    let mut tail = ProductTail {
        terms_summed,
        zeta2_correction: Complex64::new(0.0, 0.0),
        zeta3_correction: Complex64::new(0.0, 0.0),
        higher_corrections: Complex64::new(0.0, 0.0),
        omitted_bound: 0.0,
    };
    let mut z_pow = z;
    for j in 2..=tail_order + 2 {
        z_pow *= z;
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        let t = z_pow * hurwitz_zeta(j as u32, anchor)? * (sign / j as f64);
        match j {
            _ if j > tail_order + 1 => tail.omitted_bound = 2.0 * t.norm(),
            2 => tail.zeta2_correction = t,
            3 => tail.zeta3_correction = t,
            _ => tail.higher_corrections += t,
        }
    }
    Ok(tail)
}

/// `log G` as an absolute log-space error bound (= relative error of `G`).
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogProduct {
    pub log: Complex64,
    pub err: f64,
    pub terms: usize,
}

pub(crate) enum LogG {
    Finite(LogProduct),
    /// `z = -(x+m)` for some `m ≥ 0`.
    Zero,
}

fn check_x(x: Complex64) -> Result<()> {
    if nonpositive_integer(x).is_some() {
        return Err(Error::domain(format!(
            "G(x,z) needs x outside the nonpositive integers, got x={}",
            crate::numerics::fmt_complex(x)
        )));
    }
    Ok(())
}

/// Terms needed so that every omitted factor has `|z/(n+x)| ≤ 1/4`.
pub(crate) fn terms_for(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> usize {
    policy
        .max_terms
        .max((4.0 * z.norm() + x.norm()).ceil() as usize + 16)
}

pub(crate) fn log_g(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<LogG> {
    policy.validate()?;
    check_x(x)?;
    if let Some(m) = near_integer(-(z + x)) {
        if m >= 0 {
            return Ok(LogG::Zero);
        }
    }
    let n_terms = terms_for(x, z, policy);
    let mut acc = CompensatedSum::new();
    for n in (0..n_terms).rev() {
        let w = z / (x + n as f64);
        if w.norm() < 0.1 {
            acc.add(log1p_minus_w(w));
        } else {
            let l = (Complex64::new(1.0, 0.0) + w).ln();
            acc.add_with_magnitude(l - w, l.norm() + w.norm());
        }
    }
    let tail = product_tail(x, z, n_terms, policy.tail_order)?;
    let log = acc.value() + tail.total();
    let rounding = 8.0 * f64::EPSILON * (acc.abs_sum() + log.norm());
    Ok(LogG::Finite(LogProduct {
        log,
        err: tail.omitted_bound + rounding,
        terms: n_terms,
    }))
}

/// The product `G(x,z)`, accumulated in log space and corrected with the
/// zeta tail. Returns exactly zero on the lattice `z = -(x+m)`, `m ≥ 0`.
pub fn g_product(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<EvalResult> {
    match log_g(x, z, policy)? {
        LogG::Zero => Ok(EvalResult {
            value: Complex64::new(0.0, 0.0),
            err_estimate: 0.0,
            method: Method::LatticeZero,
            terms_used: 0,
        }),
        LogG::Finite(lp) => {
            if lp.log.re > LN_OVERFLOW_LIMIT {
                return Err(Error::Overflow);
            }
            Ok(EvalResult {
                value: lp.log.exp(),
                err_estimate: lp.err + 2.0 * f64::EPSILON,
                method: Method::Product,
                terms_used: lp.terms,
            })
        }
    }
}

fn residual(lhs: Complex64, rhs: Complex64, scale: f64) -> f64 {
    (lhs - rhs).norm() / scale.max(1.0)
}

/// `|G(x,z-1) − (z+x-1) e^{γ(x)} G(x,z)| / max(1, |G(x,z-1)|)`.
pub fn g_shift_z_residual(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<f64> {
    let lhs = g_product(x, z - 1.0, policy)?.value;
    let gamma = euler_gamma_x(x, policy)?.value;
    let rhs = (z + x - 1.0) * gamma.exp() * g_product(x, z, policy)?.value;
    Ok(residual(lhs, rhs, lhs.norm()))
}

/// `|G(x-1,z) − ((z+x-1)/(x-1)) e^{-z/(x-1)} G(x,z)| / max(1, |G(x-1,z)|)`.
pub fn g_shift_x_residual(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<f64> {
    let xm1 = x - 1.0;
    check_x(xm1)?;
    let lhs = g_product(xm1, z, policy)?.value;
    let rhs = (z + xm1) / xm1 * (-z / xm1).exp() * g_product(x, z, policy)?.value;
    Ok(residual(lhs, rhs, lhs.norm()))
}

/// Two readings of the exponent in the reflection product for `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotVariant {
    /// `e^{z cot(πx) + z/x}`
    Literal,
    /// `e^{π z cot(πx) + z/x}`
    PiScaled,
}

/// Residual of
/// `G(x,-z) G(-x,z) = ((z-x) sin π(z-x) / (x sin πx)) e^{c z cot(πx) + z/x}`
/// with `c = 1` or `c = π` depending on `variant`. Normalized by
/// `max(1, |lhs|, |rhs|)`.
pub fn g_sin_residual(
    x: Complex64,
    z: Complex64,
    variant: CotVariant,
    policy: &TruncationPolicy,
) -> Result<f64> {
    if near_integer(x).is_some() {
        return Err(Error::domain(
            "reflection product needs x outside the integers",
        ));
    }
    let lhs = g_product(x, -z, policy)?.value * g_product(-x, z, policy)?.value;
    let scale = match variant {
        CotVariant::Literal => 1.0,
        CotVariant::PiScaled => std::f64::consts::PI,
    };
    let d = z - x;
    let rhs = d * sin_pi(d) / (x * sin_pi(x)) * (scale * z * cot_pi(x) + z / x).exp();
    Ok(residual(lhs, rhs, lhs.norm().max(rhs.norm())))
}

/// Truncated `∏_{n≥1} (1 - z²/(n+x)²)(1 - z²/(n-x)²)` with its zeta tail,
/// returned as `(log of the product, log-space error bound)`.
pub(crate) fn sin2_log_product(
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<(Complex64, f64)> {
    let n_terms = policy
        .max_terms
        .max((4.0 * z.norm() + x.norm()).ceil() as usize + 16);
    let z2 = z * z;
    let mut acc = CompensatedSum::new();
    for n in (1..=n_terms).rev() {
        let a = x + n as f64;
        let b = n as f64 - x;
        acc.add(log1p(-z2 / (a * a)));
        acc.add(log1p(-z2 / (b * b)));
    }
    // Σ_{n>N} log(1 - z²/a_n²) = −Σ_{j≥1} z^{2j} ζ(2j, ·) / j
    let hi = x + (n_terms as f64 + 1.0);
    let lo = (n_terms as f64 + 1.0) - x;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut omitted = 0.0;
    let mut z_pow = Complex64::new(1.0, 0.0);
    let order = policy.tail_order.max(1);
    for j in 1..=order + 1 {
        z_pow *= z2;
        let zsum = hurwitz_zeta(2 * j as u32, hi)? + hurwitz_zeta(2 * j as u32, lo)?;
        let t = -z_pow * zsum / j as f64;
        if j <= order {
            tail += t;
        } else {
            omitted = 2.0 * t.norm();
        }
    }
    let log = acc.value() + tail;
    Ok((
        log,
        omitted + 8.0 * f64::EPSILON * (acc.abs_sum() + log.norm()),
    ))
}

/// Residual between the truncated double product and
/// `(x / sin πx)² (sin² πz − sin² πx) / (z² − x²)`.
pub fn sin2_product_residual(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<f64> {
    policy.validate()?;
    if near_integer(x).is_some() {
        return Err(Error::domain("sine product needs x outside the integers"));
    }
    let denom = z * z - x * x;
    if denom.norm() <= crate::numerics::LATTICE_TOL {
        return Err(Error::domain("sine product needs z² ≠ x²"));
    }
    let (log, _) = sin2_log_product(x, z, policy)?;
    let lhs = log.exp();
    let sx = sin_pi(x);
    let sz = sin_pi(z);
    let rhs = (x / sx).powu(2) * (sz * sz - sx * sx) / denom;
    Ok(residual(lhs, rhs, lhs.norm().max(rhs.norm())))
}
