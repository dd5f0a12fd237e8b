use num_complex::Complex64;

use super::{classify, LogGamma};
use crate::error::Result;
use crate::numerics::{hurwitz_zeta, log1p, CompensatedSum};
use crate::policy::{Acceleration, EvalResult, Method, TruncationPolicy};

const LEVELS: usize = 5;

/// Largest checkpoint for the limit form. The smallest checkpoint `N/16`
/// must be large against `|x|` and `|z|` for the `1/n` expansion to settle.
fn limit_terms(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> usize {
    let floor = 64 * (x.norm() + z.norm()).ceil() as usize + 128;
    policy.max_terms.max(floor).div_ceil(16) * 16
}

/// Γ(x,z) as `lim n^z (x)_n / (z+x-1)_{n+1}`.
///
/// `log s_n` is accumulated at `n = N/16, N/8, …, N` and, with Richardson
/// acceleration, extrapolated in `1/n` to order 4. The estimate is the gap
/// to the order-3 extrapolant from the first four checkpoints.
pub fn gamma_euler_limit(
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult> {
    policy.validate()?;
    classify(x, z).ensure_clean(x, z)?;
    let n_max = limit_terms(x, z, policy);
    let base = -(z + x - 1.0).ln();
    let mut acc = CompensatedSum::new();
    let mut logs = [Complex64::new(0.0, 0.0); LEVELS];
    let mut k = 0usize;
    for (level, slot) in logs.iter_mut().enumerate() {
        let n = (n_max >> (LEVELS - 1 - level)).max(1);
        while k < n {
            acc.add(log1p(z / (x + k as f64)));
            k += 1;
        }
        *slot = z * (n as f64).ln() + base - acc.value();
    }
    let rounding =
        8.0 * f64::EPSILON * (acc.abs_sum() + (z * (n_max as f64).ln()).norm() + base.norm());

    let (log, err) = match policy.acceleration {
        Acceleration::None => {
            let last = logs[LEVELS - 1];
            (last, 2.0 * (last - logs[LEVELS - 2]).norm() + rounding)
        }
        Acceleration::Richardson => {
            let mut t = logs;
            let mut amp = [1.0f64; LEVELS];
            let mut prev_diag = t[0];
            for j in 1..LEVELS {
                let f = (1u64 << j) as f64 - 1.0;
                for i in (j..LEVELS).rev() {
                    t[i] = t[i] + (t[i] - t[i - 1]) / f;
                    amp[i] = amp[i] * (1.0 + 1.0 / f) + amp[i - 1] / f;
                }
                if j == LEVELS - 2 {
                    prev_diag = t[LEVELS - 2];
                }
            }
            let best = t[LEVELS - 1];
            (best, (best - prev_diag).norm() + amp[LEVELS - 1] * rounding)
        }
    };
    LogGamma {
        log,
        err,
        terms: n_max,
    }
    .into_result_at(x, z, Method::EulerLimit)
}

/// Number of factors so the paired tail expansion converges quickly.
fn product_terms(x: Complex64, z: Complex64, policy: &TruncationPolicy) -> usize {
    policy
        .max_terms
        .max((4.0 * (x.norm() + z.norm())).ceil() as usize + 16)
}

/// Γ(x,z) as `(x/((z+x-1)(z+x))) ∏_{n≥1} (1+1/n)^z (1+z/(x+n))^{-1}`.
///
/// The remainder after `N` factors is expanded in Hurwitz zeta values:
/// `−z Σ_{i≥1} (−x)^i ζ(i+1, N+1) + Σ_{j≥2} (−1)^{j−1}/j [z ζ(j,N+1) − z^j ζ(j,x+N+1)]`.
pub fn gamma_euler_product(
    x: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult> {
    policy.validate()?;
    classify(x, z).ensure_clean(x, z)?;
    let n_terms = product_terms(x, z, policy);
    let mut acc = CompensatedSum::new();
    for n in (1..=n_terms).rev() {
        let a = z * (1.0 / n as f64).ln_1p();
        let b = log1p(z / (x + n as f64));
        acc.add_with_magnitude(a - b, a.norm() + b.norm());
    }
    let head = x.ln() - (z + x - 1.0).ln() - (z + x).ln();

    let order = policy.tail_order.max(1);
    let one = Complex64::new(n_terms as f64 + 1.0, 0.0);
    let shifted = x + (n_terms as f64 + 1.0);
    let mut tail = Complex64::new(0.0, 0.0);
    let mut omitted = 0.0;
    let mut x_pow = Complex64::new(1.0, 0.0);
    for i in 1..=order + 1 {
        x_pow *= -x;
        let t = -z * x_pow * hurwitz_zeta(i as u32 + 1, one)?;
        if i <= order {
            tail += t;
        } else {
            omitted += 2.0 * t.norm();
        }
    }
    let mut z_pow = z;
    for j in 2..=order + 2 {
        z_pow *= z;
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        let t = (z * hurwitz_zeta(j as u32, one)? - z_pow * hurwitz_zeta(j as u32, shifted)?)
            * (sign / j as f64);
        if j <= order + 1 {
            tail += t;
        } else {
            omitted += 2.0 * t.norm();
        }
    }
    let log = head + acc.value() + tail;
    let rounding = 8.0 * f64::EPSILON * (acc.abs_sum() + head.norm() + log.norm());
    LogGamma {
        log,
        err: omitted + rounding,
        terms: n_terms,
    }
    .into_result_at(x, z, Method::EulerProduct)
}
