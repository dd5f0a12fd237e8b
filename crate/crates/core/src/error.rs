use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Argument sits on a simple pole. For Γ(x,z) the pole is
    /// `z = -(x + pole_index)` and `residue` carries its closed-form residue.
    #[error("pole m={pole_index}{}", fmt_residue(.residue))]
    Pole {
        pole_index: i64,
        residue: Option<Complex64>,
    },

    /// |value| would exceed 1e300.
    #[error("overflow: |value| exceeds 1e300")]
    Overflow,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

fn fmt_residue(r: &Option<Complex64>) -> String {
    match r {
        Some(r) => format!(", residue={}", crate::numerics::fmt_complex(*r)),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Exit-code class used by front ends: math-domain problems vs. usage.
    pub fn is_math_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Pole { .. } | Error::Overflow
        )
    }
}
