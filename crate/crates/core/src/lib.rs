//! The two-variable gamma function Γ(x,z).
//!
//! Γ(x,z) is built on the Weierstrass-type product
//! `G(x,z) = ∏_{n≥0} (1 + z/(n+x)) e^{-z/(n+x)}` and the generalized Euler
//! constant `γ(x)`, and reduces to the classical Γ(z) at `x = 1`.
//!
//! The crate is organized as
//!
//! * [`numerics`]: Pochhammer symbols, Hurwitz/Riemann zeta, digamma, the
//!   classical gamma function and `γ(x)`.
//! * [`product`]: the product `G(x,z)` and its identities.
//! * [`gamma2`]: Γ(x,z) by four independent algorithms, domain
//!   classification, special values, residues and the exact Stirling formula.
//! * [`series`]: Taylor expansions in either variable with recursively
//!   generated coefficients.
//! * [`verify`]: an identity registry and a grid-based verification harness.

pub mod error;
pub mod gamma2;
pub mod numerics;
pub mod policy;
pub mod product;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use gamma2::{
    classify, gamma_euler_limit, gamma_euler_product, gamma_stirling, gamma_stirling_log,
    gamma_weierstrass, gamma_with_method, gamma_xz, gaussian_norm, half_integer_value, i_integral,
    residue_at, DomainClassification, GaussianNorm, StirlingParts,
};
pub use num_complex::Complex64;
pub use numerics::{
    digamma, euler_gamma_x, gamma_classical, hurwitz_zeta, pochhammer, riemann_zeta,
    stieltjes_zeroth,
};
pub use policy::{Acceleration, EvalResult, Method, TruncationPolicy};
pub use product::{g_product, CotVariant, ProductTail};

/// The scalar every operation consumes and returns.
pub type ComplexValue = Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
