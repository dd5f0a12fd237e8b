use num_complex::Complex64;

use super::{
    classify, gamma_euler_limit, gamma_euler_product, gamma_stirling, log_gamma_weierstrass,
    LogGamma,
};
use crate::error::{Error, Result};
use crate::policy::{EvalResult, Method, TruncationPolicy};

/// Above this size real positive arguments go through the Stirling formula.
const STIRLING_THRESHOLD: f64 = 50.0;

/// Γ(x,z) by the best available path.
///
/// Poles produce [`Error::Pole`] with the closed-form residue. Large real
/// positive arguments use the exact Stirling formula; everything else uses the
/// Weierstrass product, after shifting `z` upward with
/// `Γ(x,z+1) = (z+x−1) Γ(x,z)` whenever `Re(z+x) < 1`.
pub fn gamma_xz(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<EvalResult> {
    policy.validate()?;
    classify(x, z).ensure_clean(x, z)?;
    let real = x.im == 0.0 && z.im == 0.0;
    if real && x.re > 0.0 && z.re > 0.0 && x.re + z.re > 1.0 && x.re.max(z.re) > STIRLING_THRESHOLD
    {
        return gamma_stirling(x, z, policy);
    }
    let shift = if (z + x).re < 1.0 {
        (1.0 - (z + x).re).ceil() as usize
    } else {
        0
    };
    let shifted = log_gamma_weierstrass(x, z + shift as f64, policy)?;
    let mut log = shifted.log;
    let mut rounding = 0.0;
    for j in 0..shift {
        let f = (z + x - 1.0 + j as f64).ln();
        log -= f;
        rounding += f.norm();
    }
    LogGamma {
        log,
        err: shifted.err + 4.0 * f64::EPSILON * (rounding + log.norm()),
        terms: shifted.terms,
    }
    .into_result_at(x, z, Method::Weierstrass)
}

/// Γ(x,z) by an explicitly chosen path.
pub fn gamma_with_method(
    method: Method,
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult> {
    match method {
        Method::Weierstrass => super::gamma_weierstrass(x, z, policy),
        Method::EulerLimit => gamma_euler_limit(x, z, policy),
        Method::EulerProduct => gamma_euler_product(x, z, policy),
        Method::Stirling => gamma_stirling(x, z, policy),
        other => Err(Error::Argument(format!(
            "`{}` is not an evaluation method for Γ(x,z)",
            other.as_str()
        ))),
    }
}
