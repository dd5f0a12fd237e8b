//! Γ(x,z) = 1 / ((z+x-1) e^{zγ(x)} G(x,z)).
//!
//! Four independent evaluation paths (Weierstrass product, Euler limit,
//! Euler product, exact Stirling formula), a dispatcher, domain
//! classification and closed-form special values.

mod dispatch;
mod domain;
mod euler;
mod special;
mod stirling;
mod weierstrass;

pub use dispatch::{gamma_with_method, gamma_xz};
pub use domain::{classify, pole_distance, DomainClassification};
pub use euler::{gamma_euler_limit, gamma_euler_product};
pub use special::{gaussian_norm, half_integer_value, residue_at, GaussianNorm};
pub use stirling::{
    gamma_stirling, gamma_stirling_log, i_integral, i_integral_with_err, StirlingParts,
};
pub use weierstrass::gamma_weierstrass;

pub(crate) use weierstrass::log_gamma_weierstrass;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::LN_OVERFLOW_LIMIT;
use crate::policy::{EvalResult, Method};

/// A logarithm of Γ(x,z) with an absolute error bound on it.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogGamma {
    pub log: Complex64,
    pub err: f64,
    pub terms: usize,
}

impl LogGamma {
    /// Γ(x,z) is real on the real axis; drop the rounding residue of
    /// `exp(log)` when the log went through a negative branch.
    pub(crate) fn into_result_at(
        self,
        x: Complex64,
        z: Complex64,
        method: Method,
    ) -> Result<EvalResult> {
        let mut r = self.into_result(method)?;
        if x.im == 0.0 && z.im == 0.0 {
            r.value.im = 0.0;
        }
        Ok(r)
    }

    pub(crate) fn into_result(self, method: Method) -> Result<EvalResult> {
        if self.log.re > LN_OVERFLOW_LIMIT {
            return Err(Error::Overflow);
        }
        Ok(EvalResult {
            value: self.log.exp(),
            err_estimate: self.err + 2.0 * f64::EPSILON,
            method,
            terms_used: self.terms,
        })
    }
}
