use num_complex::Complex64;

use super::residue_at;
use crate::error::{Error, Result};
use crate::numerics::{fmt_complex, near_integer, nonpositive_integer};

/// Where `(x, z)` sits relative to the poles of Γ(x,·), which are
/// `z = -(x+m)` for `m ∈ {-1, 0, 1, …}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainClassification {
    /// `x ∉ {0, -1, -2, …}`
    pub x_ok: bool,
    /// `z` is not a pole.
    pub z_in_sx: bool,
    pub pole_index: Option<i64>,
    /// `x ∈ {0, -1, …}` and `z` not a pole, where Γ(x,z) has limit 0 in `x`.
    pub is_limit_zero_case: bool,
}

/// Classifies `(x, z)` with detection tolerance 1e-12.
pub fn classify(x: Complex64, z: Complex64) -> DomainClassification {
    let x_ok = nonpositive_integer(x).is_none();
    let pole_index = near_integer(-(z + x)).filter(|&m| m >= -1);
    DomainClassification {
        x_ok,
        z_in_sx: pole_index.is_none(),
        pole_index,
        is_limit_zero_case: !x_ok && pole_index.is_none(),
    }
}

impl DomainClassification {
    /// Turns a non-clean classification into the matching error; pole errors
    /// carry the closed-form residue when it is finite.
    pub fn ensure_clean(&self, x: Complex64, z: Complex64) -> Result<()> {
        if !self.x_ok {
            return Err(Error::domain(format!(
                "x={} is a nonpositive integer (Γ(x,z) is only defined there as a limit)",
                fmt_complex(x)
            )));
        }
        if let Some(m) = self.pole_index {
            let _ = z;
            return Err(Error::Pole {
                pole_index: m,
                residue: residue_at(x, m).ok(),
            });
        }
        Ok(())
    }
}

/// Distance from `(x, z)` to the singular set: the smaller of the distance of
/// `z` to the nearest pole `-(x+m)` and of `x` to `{0, -1, …}`.
pub fn pole_distance(x: Complex64, z: Complex64) -> f64 {
    let to_nonpositive = |w: Complex64| (w - w.re.round().min(0.0)).norm();
    // the poles are exactly where x + z - 1 ∈ {0, -1, -2, …}
    to_nonpositive(x + z - 1.0).min(to_nonpositive(x))
}
