use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Acceleration {
    None,
    Richardson,
}

/// Truncation controls shared by every product and series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    /// Number of directly summed terms.
    pub max_terms: usize,
    /// Number of Hurwitz-zeta tail corrections added after `max_terms`.
    pub tail_order: usize,
    pub target_rel_tol: f64,
    pub acceleration: Acceleration,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy {
            max_terms: 10_000,
            tail_order: 6,
            target_rel_tol: 1e-13,
            acceleration: Acceleration::Richardson,
        }
    }
}

impl TruncationPolicy {
    pub const MIN_TERMS: usize = 8;
    pub const MIN_TOL: f64 = 1e-15;

    pub fn new(
        max_terms: usize,
        tail_order: usize,
        target_rel_tol: f64,
        acceleration: Acceleration,
    ) -> Result<Self> {
        let p = TruncationPolicy {
            max_terms,
            tail_order,
            target_rel_tol,
            acceleration,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        TruncationPolicy { max_terms, ..self }
    }

    pub fn with_tail_order(self, tail_order: usize) -> Self {
        TruncationPolicy { tail_order, ..self }
    }

    pub fn with_acceleration(self, acceleration: Acceleration) -> Self {
        TruncationPolicy {
            acceleration,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < Self::MIN_TERMS {
            return Err(Error::Argument(format!(
                "max_terms must be at least {}, got {}",
                Self::MIN_TERMS,
                self.max_terms
            )));
        }
        if !(self.target_rel_tol >= Self::MIN_TOL) || !self.target_rel_tol.is_finite() {
            return Err(Error::Argument(format!(
                "target_rel_tol must be a finite value >= {:e}, got {:e}",
                Self::MIN_TOL,
                self.target_rel_tol
            )));
        }
        Ok(())
    }
}

/// Which algorithm produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Weierstrass,
    EulerLimit,
    EulerProduct,
    Stirling,
    /// Truncated product `G(x,z)` with zeta tail.
    Product,
    /// Harmonic partial sums for `γ(x)`.
    PartialSum,
    /// The `γ₀(x)` limit form with `log(n+x)`.
    StieltjesLimit,
    /// Exact zero of `G` on its lattice.
    LatticeZero,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Weierstrass => "weierstrass",
            Method::EulerLimit => "euler-limit",
            Method::EulerProduct => "euler-product",
            Method::Stirling => "stirling",
            Method::Product => "product",
            Method::PartialSum => "partial-sum",
            Method::StieltjesLimit => "stieltjes-limit",
            Method::LatticeZero => "lattice-zero",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value with an a posteriori relative error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    /// Relative error estimate; for values that are exactly zero it is absolute.
    pub err_estimate: f64,
    pub method: Method,
    pub terms_used: usize,
}
