//! Scalar special functions shared by every other module.

mod digamma;
mod euler_gamma;
mod gamma;
mod sum;
mod trig;
mod zeta;

pub use digamma::digamma;
pub use euler_gamma::{euler_gamma_x, stieltjes_zeroth};
pub use gamma::{gamma_classical, ln_gamma_classical, rgamma_classical};
pub use sum::CompensatedSum;
pub use trig::{cos_pi, cot_pi, sin_pi, tan_pi};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_with_err, riemann_zeta};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which an argument is treated as lying exactly on a
/// lattice point (pole or zero).
pub const LATTICE_TOL: f64 = 1e-12;

/// Largest magnitude an operation may return before reporting overflow.
pub const OVERFLOW_LIMIT: f64 = 1e300;

/// `ln(1e300)`, the overflow threshold in log space.
pub(crate) const LN_OVERFLOW_LIMIT: f64 = 690.775_527_898_213_7;

/// If `z` is within [`LATTICE_TOL`] of a nonpositive integer `-n`, returns `n`.
pub fn nonpositive_integer(z: Complex64) -> Option<u64> {
    let r = z.re.round();
    if r <= 0.0 && (z.re - r).abs() <= LATTICE_TOL && z.im.abs() <= LATTICE_TOL {
        Some((-r) as u64)
    } else {
        None
    }
}

/// If `z` is within [`LATTICE_TOL`] of an integer, returns it.
pub fn near_integer(z: Complex64) -> Option<i64> {
    let r = z.re.round();
    if (z.re - r).abs() <= LATTICE_TOL && z.im.abs() <= LATTICE_TOL {
        Some(r as i64)
    } else {
        None
    }
}

/// Rising factorial `(z)_n = z(z+1)…(z+n-1)`, multiplied in ascending order.
pub fn pochhammer(z: Complex64, n: u32) -> Result<Complex64> {
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..n {
        acc *= z + k as f64;
        if !(acc.norm() <= OVERFLOW_LIMIT) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc)
}

/// `log(1+w) - w`, accurate for small `w` where the subtraction would cancel.
pub(crate) fn log1p_minus_w(w: Complex64) -> Complex64 {
    let r = w.norm();
    if r < 0.1 {
        // -w²/2 + w³/3 - …; 0.1^17 < eps
        let mut pow = w * w;
        let mut acc = Complex64::new(0.0, 0.0);
        let mut sign = -1.0;
        for j in 2..=18 {
            let t = pow * (sign / j as f64);
            acc += t;
            if t.norm() <= 1e-18 * acc.norm() {
                break;
            }
            pow *= w;
            sign = -sign;
        }
        acc
    } else {
        (Complex64::new(1.0, 0.0) + w).ln() - w
    }
}

/// `log(1+w)` with the small-`w` series where needed.
pub(crate) fn log1p(w: Complex64) -> Complex64 {
    if w.norm() < 0.1 {
        log1p_minus_w(w) + w
    } else {
        (Complex64::new(1.0, 0.0) + w).ln()
    }
}

/// Formats `a+bi` using the shortest round-trip representation of each part.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(Complex64::new(0.3, -2.0), 0).unwrap(), c(1.0));
        assert_eq!(pochhammer(c(3.0), 3).unwrap(), c(60.0));
        assert_eq!(pochhammer(c(-1.5), 2).unwrap(), c(0.75));
    }

    #[test]
    fn pochhammer_overflow() {
        assert_eq!(pochhammer(c(1e100), 4), Err(Error::Overflow));
    }

    #[test]
    fn pochhammer_step_is_exact() {
        let z = Complex64::new(-2.25, 0.75);
        for n in 0..20 {
            let a = pochhammer(z, n).unwrap() * (z + n as f64);
            assert_eq!(pochhammer(z, n + 1).unwrap(), a);
        }
    }

    #[test]
    fn log1p_minus_w_matches_direct_away_from_zero() {
        for w in [
            Complex64::new(0.09, 0.02),
            Complex64::new(-0.05, 0.08),
            Complex64::new(1e-3, -2e-3),
        ] {
            let direct = (Complex64::new(1.0, 0.0) + w).ln() - w;
            assert!((log1p_minus_w(w) - direct).norm() < 1e-15);
        }
        let w = Complex64::new(1e-9, 0.0);
        assert!((log1p_minus_w(w).re + 0.5e-18).abs() < 1e-27);
    }

    #[test]
    fn lattice_detection() {
        assert_eq!(nonpositive_integer(c(-3.0 + 1e-13)), Some(3));
        assert_eq!(nonpositive_integer(c(0.0)), Some(0));
        assert_eq!(nonpositive_integer(c(2.0)), None);
        assert_eq!(nonpositive_integer(Complex64::new(-1.0, 1e-6)), None);
        assert_eq!(near_integer(c(2.0)), Some(2));
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_complex(Complex64::new(1.5, -2.0)), "1.5-2i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 1.0)), "0+1i");
        assert_eq!(fmt_complex(c(60.0)), "60");
    }
}
