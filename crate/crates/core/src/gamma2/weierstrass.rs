use num_complex::Complex64;

use super::{classify, LogGamma};
use crate::error::{Error, Result};
use crate::numerics::euler_gamma_x;
use crate::policy::{EvalResult, Method, TruncationPolicy};
use crate::product::{log_g, LogG};

pub(crate) fn log_gamma_weierstrass(
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<LogGamma> {
    policy.validate()?;
    classify(x, z).ensure_clean(x, z)?;
    let g = match log_g(x, z, policy)? {
        LogG::Finite(g) => g,
        // classify already rejects z = -(x+m)
        LogG::Zero => return Err(Error::domain("G(x,z) vanished off the pole set")),
    };
    let gam = euler_gamma_x(x, policy)?;
    let gam_err = gam.err_estimate * gam.value.norm().max(1.0);
    let a = (z + x - 1.0).ln();
    let b = z * gam.value;
    let log = -(a + b + g.log);
    let rounding = 4.0 * f64::EPSILON * (a.norm() + b.norm() + g.log.norm());
    Ok(LogGamma {
        log,
        err: g.err + z.norm() * gam_err + rounding,
        terms: g.terms,
    })
}

/// Γ(x,z) from the defining product: `−[log(z+x−1) + zγ(x) + log G(x,z)]`,
/// exponentiated.
pub fn gamma_weierstrass(
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult> {
    log_gamma_weierstrass(x, z, policy)?.into_result_at(x, z, Method::Weierstrass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::gamma_classical;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn eval(x: f64, z: f64) -> EvalResult {
        gamma_weierstrass(c(x), c(z), &TruncationPolicy::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert!((eval(2.7, 1.0).value.re - 1.0).abs() < 1e-12);
        assert!((eval(0.5, 0.0).value.re + 2.0).abs() < 1e-12);
        assert!((eval(3.0, 4.0).value.re - 60.0).abs() < 1e-10);
        assert!(eval(3.0, 4.0).err_estimate < 1e-11);
    }

    #[test]
    fn reduces_to_classical_gamma() {
        for z in [
            c(0.5),
            c(-1.5),
            c(7.25),
            Complex64::new(0.3, 2.0),
            Complex64::new(-2.2, -1.4),
        ] {
            let v = gamma_weierstrass(c(1.0), z, &TruncationPolicy::default()).unwrap();
            let r = gamma_classical(z).unwrap();
            assert!((v.value - r).norm() / r.norm() < 1e-12, "{z}");
        }
    }

    #[test]
    fn ratio_of_classical_gammas() {
        // independent oracle: Γ(x,z) = Γ(x+z-1) / Γ(x)
        let x = Complex64::new(1.7, -0.6);
        let z = Complex64::new(-0.4, 1.3);
        let v = gamma_weierstrass(x, z, &TruncationPolicy::default()).unwrap();
        let r = gamma_classical(x + z - 1.0).unwrap() / gamma_classical(x).unwrap();
        assert!((v.value - r).norm() / r.norm() < 1e-12);
        assert!(v.err_estimate < 1e-11);
    }

    #[test]
    fn errors() {
        let p = TruncationPolicy::default();
        assert!(matches!(
            gamma_weierstrass(c(2.5), c(-2.5), &p),
            Err(Error::Pole { pole_index: 0, .. })
        ));
        assert!(matches!(
            gamma_weierstrass(c(-1.0), c(0.5), &p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gamma_weierstrass(c(1.0), c(200.0), &p),
            Err(Error::Overflow)
        ));
    }
}
