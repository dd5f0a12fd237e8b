use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma2::gamma_weierstrass;
use crate::numerics::{near_integer, tan_pi};
use crate::policy::TruncationPolicy;

/// Γ(x,z) through the defining product, so that identity checks do not lean
/// on the dispatcher's own use of the recurrences.
pub(crate) fn gw(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    gamma_weierstrass(x, z, policy).map(|r| r.value)
}

/// `|lhs − rhs| / max(1, |lhs|, |rhs|)`.
pub fn relative_residual(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / 1f64.max(lhs.norm()).max(rhs.norm())
}

/// `f(x,z) = n^{nz} Γ(x,z) Γ(x,z+1/n) ⋯ Γ(x,z+(n−1)/n) / (n Γ(n(x−1)+1, nz))`.
pub fn multiplication_constant(
    n: u32,
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Argument("multiplication order must be ≥ 1".into()));
    }
    let nf = n as f64;
    let mut prod = (nf.ln() * nf * z).exp();
    for k in 0..n {
        prod *= gw(x, z + k as f64 / nf, policy)?;
    }
    Ok(prod / (nf * gw(nf * (x - 1.0) + 1.0, nf * z, policy)?))
}

/// `|f(x,z₁) − f(x,z₂)| / max(1, |f(x,z₁)|)` for the order-2 multiplication
/// constant.
pub fn mult_const_check(
    x: Complex64,
    z1: Complex64,
    z2: Complex64,
    policy: &TruncationPolicy,
) -> Result<f64> {
    let a = multiplication_constant(2, x, z1, policy)?;
    let b = multiplication_constant(2, x, z2, policy)?;
    Ok((a - b).norm() / a.norm().max(1.0))
}

/// Residual of
/// `Γ(x,z)Γ(x,z+½)Γ(1−x,z)Γ(1−x,z+½) = 2^{2−4z} Γ(2x−1,2z) Γ(1−2x,2z) tan(πx)/(x−½)`.
pub fn gauss2_check(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> Result<f64> {
    if near_integer(x).is_some() || near_integer(2.0 * x).is_some() {
        return Err(Error::domain(
            "the order-2 product formula needs x ∉ ℤ ∪ {1/2}",
        ));
    }
    let one = Complex64::new(1.0, 0.0);
    let lhs = gw(x, z, policy)?
        * gw(x, z + 0.5, policy)?
        * gw(one - x, z, policy)?
        * gw(one - x, z + 0.5, policy)?;
    let rhs = (std::f64::consts::LN_2 * (2.0 - 4.0 * z)).exp()
        * gw(2.0 * x - 1.0, 2.0 * z, policy)?
        * gw(one - 2.0 * x, 2.0 * z, policy)?
        * tan_pi(x)
        / (x - 0.5);
    Ok(relative_residual(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn p() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn mult_const_examples() {
        assert!(mult_const_check(c(1.5), c(0.4), c(0.7), &p()).unwrap() <= 1e-8);
        assert_eq!(mult_const_check(c(2.0), c(0.3), c(0.3), &p()).unwrap(), 0.0);
        let x = Complex64::new(1.2, 0.1);
        assert!(mult_const_check(x, c(0.3), c(0.9), &p()).unwrap() <= 1e-8);
        // n = 3 is z-independent as well
        let a = multiplication_constant(3, c(1.7), c(0.2), &p()).unwrap();
        let b = multiplication_constant(3, c(1.7), Complex64::new(0.8, 0.4), &p()).unwrap();
        assert!(relative_residual(a, b) < 1e-11);
    }

    #[test]
    fn gauss2_examples() {
        assert!(gauss2_check(c(0.3), c(0.4), &p()).unwrap() <= 1e-8);
        // (¼, ¼) puts Γ(x, z+½) and Γ(1−2x, 2z) on poles; nearby points are fine
        assert!(matches!(
            gauss2_check(c(0.25), c(0.25), &p()),
            Err(Error::Pole { pole_index: -1, .. })
        ));
        assert!(gauss2_check(c(0.25), c(0.26), &p()).unwrap() <= 1e-8);
        assert!(gauss2_check(c(0.25), Complex64::new(0.25, 0.01), &p()).unwrap() <= 1e-8);
        let z = Complex64::new(0.6, -0.2);
        let a = gauss2_check(c(0.35), z, &p()).unwrap();
        let b = gauss2_check(c(0.65), z, &p()).unwrap();
        assert!(a < 1e-11 && b < 1e-11);
        assert!(gauss2_check(c(0.5), z, &p()).is_err());
    }
}
