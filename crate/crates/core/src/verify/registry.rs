use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::checks::{gauss2_check, gw, mult_const_check, relative_residual};
use super::grid::{clear_of_nonpositive, clear_of_poles, integer_distance, Sampler, POLE_MARGIN};
use super::{GridSpec, IdentityDescriptor, IdentityReport, PointResidual, Reading};
use crate::error::Result;
use crate::gamma2::{
    gamma_euler_limit, gamma_euler_product, gamma_stirling_log, gaussian_norm, half_integer_value,
    i_integral, residue_at,
};
use crate::numerics::{
    digamma, euler_gamma_x, gamma_classical, pochhammer, sin_pi, stieltjes_zeroth,
};
use crate::policy::TruncationPolicy;
use crate::product::{
    g_shift_x_residual, g_shift_z_residual, g_sin_residual, sin2_product_residual, CotVariant,
};
use crate::series::{coeffs_a, coeffs_b, log_series_in_x, log_series_in_z, DEFAULT_ORDER};

type Point = Vec<Complex64>;

pub(super) struct Outcome {
    samples: Vec<PointResidual>,
    notes: Option<String>,
}

impl From<Vec<PointResidual>> for Outcome {
    fn from(samples: Vec<PointResidual>) -> Self {
        Outcome {
            samples,
            notes: None,
        }
    }
}

pub(super) struct Entry {
    pub id: &'static str,
    statement: &'static str,
    arity: &'static [&'static str],
    constraints: &'static str,
    tolerance: f64,
    pub default_points: usize,
    reading: Reading,
    operations: &'static [&'static str],
    grid: &'static str,
    notes: &'static str,
    check: fn(&mut Sampler, usize, &TruncationPolicy) -> Outcome,
}

impl Entry {
    pub fn descriptor(&self) -> IdentityDescriptor {
        IdentityDescriptor {
            id: self.id.into(),
            statement: self.statement.into(),
            arity: self.arity.iter().map(|s| s.to_string()).collect(),
            domain_constraints: self.constraints.into(),
            tolerance: self.tolerance,
            default_points: self.default_points,
            reading: self.reading,
            operations: self.operations.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn run(&self, seed: u64, n_points: usize, policy: &TruncationPolicy) -> IdentityReport {
        let mut sampler = Sampler::new(seed, self.id);
        let outcome = (self.check)(&mut sampler, n_points, policy);
        let max_residual = if outcome.samples.is_empty() {
            f64::MAX
        } else {
            outcome
                .samples
                .iter()
                .map(|s| s.residual)
                .fold(0.0, f64::max)
        };
        let mut variant_notes = self.notes.to_string();
        if let Some(extra) = outcome.notes {
            if !variant_notes.is_empty() {
                variant_notes.push(' ');
            }
            variant_notes.push_str(&extra);
        }
        IdentityReport {
            id: self.id.into(),
            grid_spec: GridSpec {
                seed,
                n_points: outcome.samples.len(),
                variables: self.arity.iter().map(|s| s.to_string()).collect(),
                description: self.grid.into(),
            },
            residuals: outcome.samples,
            max_residual,
            tolerance: self.tolerance,
            pass: max_residual <= self.tolerance,
            reading: self.reading,
            variant_notes,
        }
    }
}

/// Residuals at every point, computed in parallel with order preserved.
/// Evaluation failures become `f64::MAX` with the error as a note.
fn eval<F>(points: Vec<Point>, policy: &TruncationPolicy, f: F) -> Vec<PointResidual>
where
    F: Fn(&[Complex64], &TruncationPolicy) -> Result<f64> + Sync,
{
    points
        .into_par_iter()
        .map(|point| match f(&point, policy) {
            Ok(r) if r.is_finite() => PointResidual {
                point,
                residual: r,
                note: None,
            },
            Ok(r) => PointResidual {
                point,
                residual: f64::MAX,
                note: Some(format!("non-finite residual {r}")),
            },
            Err(e) => PointResidual {
                point,
                residual: f64::MAX,
                note: Some(e.to_string()),
            },
        })
        .collect()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

// ---- grids ----------------------------------------------------------------

fn x_grid(s: &mut Sampler, n: usize, radius: f64, shifts: &'static [f64]) -> Vec<Point> {
    s.points(
        n,
        |s| vec![s.disc(radius)],
        |p| {
            shifts
                .iter()
                .all(|&d| clear_of_nonpositive(p[0] + d, POLE_MARGIN))
        },
    )
}

/// `(x, z)` in discs of `radius`, clear of the poles of Γ at every
/// `(x + dx, z + dz)` listed.
fn xz_grid(s: &mut Sampler, n: usize, radius: f64, shifts: &'static [(f64, f64)]) -> Vec<Point> {
    s.points(
        n,
        |s| vec![s.disc(radius), s.disc(radius)],
        |p| {
            let pairs: Vec<_> = shifts
                .iter()
                .map(|&(dx, dz)| (p[0] + dx, p[1] + dz))
                .collect();
            clear_of_poles(&pairs)
        },
    )
}

// ---- generalized Euler constant -------------------------------------------

fn gamma_x_rec(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(x_grid(s, n, 6.0, &[0.0, 1.0]), p, |v, p| {
        let x = v[0];
        let a = euler_gamma_x(x + 1.0, p)?.value;
        let b = euler_gamma_x(x, p)?.value - x.inv();
        Ok(relative_residual(a, b))
    })
    .into()
}

fn gamma_x_digamma(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(x_grid(s, n, 6.0, &[0.0]), p, |v, p| {
        Ok(relative_residual(
            euler_gamma_x(v[0], p)?.value,
            -digamma(v[0])?,
        ))
    })
    .into()
}

fn stieltjes(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(x_grid(s, n, 6.0, &[0.0]), p, |v, p| {
        Ok(relative_residual(
            euler_gamma_x(v[0], p)?.value,
            stieltjes_zeroth(v[0], p)?.value,
        ))
    })
    .into()
}

// ---- the product G ----------------------------------------------------------

fn g_shift_z(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.disc(6.0), s.disc(6.0)],
        |v| clear_of_nonpositive(v[0], POLE_MARGIN),
    );
    eval(pts, p, |v, p| g_shift_z_residual(v[0], v[1], p)).into()
}

fn g_shift_x(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.disc(6.0), s.disc(6.0)],
        |v| {
            clear_of_nonpositive(v[0], POLE_MARGIN) && clear_of_nonpositive(v[0] - 1.0, POLE_MARGIN)
        },
    );
    eval(pts, p, |v, p| g_shift_x_residual(v[0], v[1], p)).into()
}

fn g_sin_grid(s: &mut Sampler, n: usize) -> Vec<Point> {
    s.points(
        n,
        |s| vec![s.rect(-3.0, 3.0, 1.0), s.disc(2.0)],
        |v| integer_distance(v[0]) >= POLE_MARGIN,
    )
}

fn g_sin_literal(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(g_sin_grid(s, n), p, |v, p| {
        g_sin_residual(v[0], v[1], CotVariant::Literal, p)
    })
    .into()
}

fn g_sin_pi(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(g_sin_grid(s, n), p, |v, p| {
        g_sin_residual(v[0], v[1], CotVariant::PiScaled, p)
    })
    .into()
}

fn sin2(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.rect(-3.0, 3.0, 1.0), s.disc(3.0)],
        |v| {
            integer_distance(v[0]) >= POLE_MARGIN
                && (v[1] * v[1] - v[0] * v[0]).norm() >= POLE_MARGIN
        },
    );
    eval(pts, p, |v, p| sin2_product_residual(v[0], v[1], p)).into()
}

// ---- functional equations and special values --------------------------------

fn fe_z(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 6.0, &[(0.0, 0.0), (0.0, 1.0)]), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        Ok(relative_residual(
            gw(x, z + 1.0, p)?,
            (z + x - 1.0) * gw(x, z, p)?,
        ))
    })
    .into()
}

fn fe_x(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 6.0, &[(0.0, 0.0), (1.0, 0.0)]), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        Ok(relative_residual(
            gw(x + 1.0, z, p)?,
            (z + x - 1.0) / x * gw(x, z, p)?,
        ))
    })
    .into()
}

fn fe_xz(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 6.0, &[(0.0, 0.0), (1.0, 1.0)]), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let rhs = (z + x - 1.0) * (z + x) / x * gw(x, z, p)?;
        Ok(relative_residual(gw(x + 1.0, z + 1.0, p)?, rhs))
    })
    .into()
}

fn special_int(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.rect(0.05, 6.0, 2.0), s.disc(4.0)],
        |v| {
            integer_distance(v[0]) >= POLE_MARGIN
                && clear_of_nonpositive(v[1], POLE_MARGIN)
                && (2..=6).all(|k| clear_of_poles(&[(c(k as f64), v[1])]))
        },
    );
    eval(pts, p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let mut worst = relative_residual(gw(x, c(1.0), p)?, c(1.0));
        worst = worst.max(relative_residual(gw(x, c(0.0), p)?, (x - 1.0).inv()));
        let gz = gamma_classical(z)?;
        for k in 2..=6u32 {
            let kf = k as f64;
            worst = worst.max(relative_residual(gw(x, c(kf), p)?, pochhammer(x, k - 1)?));
            let down = pochhammer(x - kf - 1.0, k + 1)?.inv();
            worst = worst.max(relative_residual(gw(x, c(-kf), p)?, down));
            let fact: f64 = (1..k).map(f64::from).product();
            let rhs = pochhammer(z, k - 1)? / fact * gz;
            worst = worst.max(relative_residual(gw(c(kf), z, p)?, rhs));
        }
        Ok(worst)
    })
    .into()
}

fn classical_limit(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let mut pts: Vec<Point> = [
        c(0.5),
        c(1.0),
        c(1.5),
        c(2.5),
        c(4.0),
        Complex64::new(0.5, 0.5),
        Complex64::new(2.0, -1.0),
    ]
    .into_iter()
    .map(|z| vec![z])
    .collect();
    pts.extend(s.points(
        n.saturating_sub(pts.len()),
        |s| vec![s.disc(6.0)],
        |v| clear_of_nonpositive(v[0], POLE_MARGIN),
    ));
    eval(pts, p, |v, p| {
        let r = gw(c(1.0), v[0], p)? / gamma_classical(v[0])?;
        Ok((r - 1.0).norm())
    })
    .into()
}

fn conj(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 6.0, &[(0.0, 0.0)]), p, |v, p| {
        let a = gw(v[0].conj(), v[1].conj(), p)?;
        let b = gw(v[0], v[1], p)?.conj();
        Ok((a - b).norm() / b.norm().max(1.0))
    })
    .into()
}

// ---- reflection -------------------------------------------------------------

fn reflect_a(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.disc(4.0), s.disc(4.0)],
        |v| {
            let one = c(1.0);
            integer_distance(v[0]) >= POLE_MARGIN
                && clear_of_poles(&[(v[0], one - v[1]), (one - v[0], v[1])])
        },
    );
    eval(pts, p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let one = c(1.0);
        let lhs = gw(x, one - z, p)? * gw(one - x, z, p)? * (z - x) * sin_pi(z - x);
        Ok(relative_residual(lhs, -sin_pi(x)))
    })
    .into()
}

fn reflect_b_grid(s: &mut Sampler, n: usize, literal: bool) -> Vec<Point> {
    s.points(
        n,
        |s| vec![s.disc(4.0), s.disc(4.0)],
        move |v| {
            let (x, z) = (v[0], v[1]);
            let pairs = if literal {
                [(x, z), (-x, -z)]
            } else {
                [(-x, z), (x, -z)]
            };
            integer_distance(x) >= POLE_MARGIN && clear_of_poles(&pairs)
        },
    )
}

fn reflect_b_proof(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(reflect_b_grid(s, n, false), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let d = z - x;
        let lhs = gw(-x, z, p)? * gw(x, -z, p)? * (d * d * d - d) * sin_pi(d);
        Ok(relative_residual(lhs, -x * sin_pi(x)))
    })
    .into()
}

fn reflect_b_literal(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(reflect_b_grid(s, n, true), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let d = z + x;
        let lhs = gw(x, z, p)? * gw(-x, -z, p)? * (d * d * d - d) * sin_pi(d);
        Ok(relative_residual(lhs, -x * sin_pi(x)))
    })
    .into()
}

/// `Γ(−n+ε, z)/ε → (−1)^n n! Γ(z−n−1)`: Richardson-combined quotients at
/// `|ε| = 1e-4, 1e-5` along four directions, against the closed limit.
fn limit_neg(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let mut k = 0u32;
    let pts = s.points(
        n,
        |s| {
            k += 1;
            vec![c((k % 3) as f64), s.disc(4.0)]
        },
        |v| clear_of_nonpositive(v[1] - v[0] - 1.0, POLE_MARGIN),
    );
    eval(pts, p, |v, p| {
        let (m, z) = (v[0].re as u32, v[1]);
        let fact: f64 = (1..=m).map(f64::from).product();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let limit = gamma_classical(z - m as f64 - 1.0)? * (sign * fact);
        let mut worst: f64 = 0.0;
        for dir in 0..4 {
            let d = Complex64::from_polar(1.0, PI / 4.0 + dir as f64 * PI / 2.0);
            let q = |r: f64| -> Result<Complex64> {
                let eps = d * r;
                Ok(gw(eps - m as f64, z, p)? / eps)
            };
            let extrapolated = (10.0 * q(1e-5)? - q(1e-4)?) / 9.0;
            worst = worst.max((extrapolated - limit).norm() / limit.norm().max(1.0));
        }
        Ok(worst)
    })
    .into()
}

fn norm(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    let pts: Vec<Point> = (0..4).map(|n| vec![c(n as f64)]).collect();
    let samples = eval(pts, p, |v, p| {
        let n = v[0].re as u32;
        let g = gaussian_norm(n);
        let w = Complex64::new(n as f64, 1.0);
        let direct = gw(w, w, p)?.norm_sqr();
        let mirrored = gw(w.conj(), w.conj(), p)?.norm_sqr();
        Ok(((g.recurrence - direct).abs() / direct).max((mirrored - direct).abs() / direct))
    });
    let ratios: Vec<String> = (0..4)
        .map(|n| {
            let g = gaussian_norm(n);
            format!("n={n}: {:.6}", g.closed_product / g.recurrence)
        })
        .collect();
    Outcome {
        samples,
        notes: Some(format!(
            "closed product / recurrence: {}.",
            ratios.join(", ")
        )),
    }
}

// ---- product representations ------------------------------------------------

fn euler_limit(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 4.0, &[(0.0, 0.0)]), p, |v, p| {
        Ok(relative_residual(
            gamma_euler_limit(v[0], v[1], p)?.value,
            gw(v[0], v[1], p)?,
        ))
    })
    .into()
}

fn euler_product(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(xz_grid(s, n, 4.0, &[(0.0, 0.0)]), p, |v, p| {
        Ok(relative_residual(
            gamma_euler_product(v[0], v[1], p)?.value,
            gw(v[0], v[1], p)?,
        ))
    })
    .into()
}

fn dup(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.disc(5.0), s.disc(5.0)],
        |v| clear_of_poles(&[(v[0], v[1]), (v[0] + v[1], -v[1])]),
    );
    eval(pts, p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let lhs = gw(x, z, p)? * gw(x + z, -z, p)? * (x - 1.0) * (z + x - 1.0);
        Ok(relative_residual(lhs, c(1.0)))
    })
    .into()
}

fn half_int(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    let pts: Vec<Point> = (0..=4)
        .flat_map(|k| (0..=4).map(move |l| (k, l)))
        .filter(|&(k, l)| k + l > 0)
        .map(|(k, l)| vec![c(k as f64), c(l as f64)])
        .collect();
    eval(pts, p, |v, p| {
        let (k, l) = (v[0].re as i64, v[1].re as i64);
        let closed = half_integer_value(k, l)?;
        let direct = gw(c(k as f64 + 0.5), c(l as f64 + 0.5), p)?;
        Ok(relative_residual(c(closed), direct))
    })
    .into()
}

/// `(z + x + m) Γ(x,z)` averaged over four directions on circles of radius
/// 1e-2 … 1e-5 around the pole, against the closed-form residue.
fn residue(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    let xs = [c(1.3), c(2.5), Complex64::new(0.7, 0.2), c(1.0)];
    let pts: Vec<Point> = xs
        .iter()
        .flat_map(|&x| (-1..=2).map(move |m| vec![x, c(m as f64)]))
        .collect();
    eval(pts, p, |v, p| {
        let (x, m) = (v[0], v[1].re as i64);
        let r = residue_at(x, m)?;
        let pole = -(x + m as f64);
        let mut worst: f64 = 0.0;
        for radius in [1e-2, 1e-3, 1e-4, 1e-5] {
            let mut avg = Complex64::new(0.0, 0.0);
            for dir in 0..4 {
                let eps = Complex64::from_polar(radius, 0.3 + dir as f64 * PI / 2.0);
                avg += gw(x, pole + eps, p)? * eps / 4.0;
            }
            worst = worst.max((avg - r).norm() / r.norm().max(1.0));
        }
        if x == c(1.0) {
            let fact: f64 = (1..=m + 1).map(|k| k as f64).product();
            let classical = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 } / fact;
            worst = worst.max((r.re - classical).abs() + r.im.abs());
        }
        Ok(worst)
    })
    .into()
}

fn mult_const(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| {
            vec![
                s.rect(0.6, 3.0, 0.5),
                s.rect(0.1, 2.5, 0.5),
                s.rect(0.1, 2.5, 0.5),
            ]
        },
        |v| {
            let x = v[0];
            [v[1], v[2]]
                .iter()
                .all(|&z| clear_of_poles(&[(x, z), (x, z + 0.5), (2.0 * x - 1.0, 2.0 * z)]))
        },
    );
    eval(pts, p, |v, p| mult_const_check(v[0], v[1], v[2], p)).into()
}

fn gauss2(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![s.rect(-2.0, 3.0, 1.0), s.disc(3.0)],
        |v| {
            let (x, z) = (v[0], v[1]);
            let one = c(1.0);
            integer_distance(2.0 * x) >= 2.0 * POLE_MARGIN
                && clear_of_poles(&[
                    (x, z),
                    (x, z + 0.5),
                    (one - x, z),
                    (one - x, z + 0.5),
                    (2.0 * x - 1.0, 2.0 * z),
                    (one - 2.0 * x, 2.0 * z),
                ])
        },
    );
    eval(pts, p, |v, p| gauss2_check(v[0], v[1], p)).into()
}

// ---- Stirling ---------------------------------------------------------------

fn stirling_exact(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    let pts = s.points(
        n,
        |s| vec![c(s.real(0.05, 30.0)), c(s.real(0.05, 30.0))],
        |v| v[0].re + v[1].re - 1.0 > POLE_MARGIN,
    );
    eval(pts, p, |v, p| {
        let parts = gamma_stirling_log(v[0].re, v[1].re, p)?;
        let direct = gw(v[0], v[1], p)?.ln();
        let l = parts.log_value();
        Ok((direct - l).norm() / l.norm().max(1.0))
    })
    .into()
}

fn main_exp(x: f64, z: f64) -> f64 {
    ((z + x - 1.5) * (z + x - 1.0).ln() - z + 1.0 - (x - 0.5) * x.ln()).exp()
}

/// Scaled deviations `t·|ratio − 1|` along `t ∈ {10, 20, 40, 80}`, with a
/// note if `|ratio − 1|` fails to decrease.
fn scaled_ratios<F>(p: &TruncationPolicy, f: F) -> Outcome
where
    F: Fn(f64, &TruncationPolicy) -> Result<f64> + Sync,
{
    let pts: Vec<Point> = [10.0, 20.0, 40.0, 80.0]
        .iter()
        .map(|&t| vec![c(t)])
        .collect();
    let mut samples = eval(pts, p, |v, p| Ok(v[0].re * f(v[0].re, p)?));
    let dev: Vec<f64> = samples.iter().map(|s| s.residual / s.point[0].re).collect();
    let monotone = dev.windows(2).all(|w| w[1] <= w[0]);
    let notes = format!(
        "|ratio−1| = {}; {}",
        dev.iter()
            .map(|d| format!("{d:.3e}"))
            .collect::<Vec<_>>()
            .join(", "),
        if monotone {
            "decreasing."
        } else {
            "not decreasing."
        }
    );
    if !monotone {
        for s in &mut samples {
            s.residual = f64::MAX;
        }
    }
    Outcome {
        samples,
        notes: Some(notes),
    }
}

fn stirling_asympt_x(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    scaled_ratios(p, |x, p| {
        let g = gw(c(x), c(2.0), p)?.re;
        Ok((g / main_exp(x, 2.0) - 1.0).abs())
    })
}

const ASYMPT_Z_X: f64 = 0.5;

fn stirling_asympt_z_exp(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    scaled_ratios(p, |z, p| {
        let x = ASYMPT_Z_X;
        let g = gw(c(x), c(z), p)?.re;
        Ok((g / (main_exp(x, z) * i_integral(x, p)?.exp()) - 1.0).abs())
    })
}

fn stirling_asympt_z_literal(_: &mut Sampler, _: usize, p: &TruncationPolicy) -> Outcome {
    scaled_ratios(p, |z, p| {
        let x = ASYMPT_Z_X;
        let g = gw(c(x), c(z), p)?.re;
        Ok((g / (main_exp(x, z) + i_integral(x, p)?) - 1.0).abs())
    })
}

// ---- series -----------------------------------------------------------------

fn z_series_grid(s: &mut Sampler, n: usize) -> Vec<Point> {
    s.points(
        n,
        |s| {
            let x = s.rect(0.3, 4.0, 1.0);
            let r = x.norm().min(1.0);
            vec![x, s.disc(r / 2.0)]
        },
        |_| true,
    )
}

fn series_z(s: &mut Sampler, n: usize, p: &TruncationPolicy) -> Outcome {
    eval(z_series_grid(s, n), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let l = log_series_in_z(x, z, DEFAULT_ORDER, p)?;
        Ok(relative_residual(l.exp(), gw(x, z + 1.0, p)?))
    })
    .into()
}

fn coeff_a(s: &mut Sampler, n: usize, p: &TruncationPolicy, literal: bool) -> Outcome {
    eval(z_series_grid(s, n), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let series = coeffs_a(x, DEFAULT_ORDER, literal, p)?;
        Ok(relative_residual(series.evaluate(z), gw(x, z + 1.0, p)?))
    })
    .into()
}

fn x_series_grid(s: &mut Sampler, n: usize) -> Vec<Point> {
    s.points(
        n,
        |s| {
            let z = s.rect(0.2, 4.0, 1.0);
            let r = (z + 1.0).norm().min(1.0);
            vec![c(1.0) + s.disc(r / 2.0), z]
        },
        |_| true,
    )
}

fn series_x(s: &mut Sampler, n: usize, p: &TruncationPolicy, literal: bool) -> Outcome {
    eval(x_series_grid(s, n), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let l = log_series_in_x(x, z, DEFAULT_ORDER, literal, p)?;
        Ok(relative_residual(l.exp(), gw(x + 1.0, z, p)?))
    })
    .into()
}

fn coeff_b(s: &mut Sampler, n: usize, p: &TruncationPolicy, literal: bool) -> Outcome {
    eval(x_series_grid(s, n), p, |v, p| {
        let (x, z) = (v[0], v[1]);
        let series = coeffs_b(z, DEFAULT_ORDER, literal, p)?;
        Ok(relative_residual(
            series.evaluate(x - 1.0),
            gw(x + 1.0, z, p)?,
        ))
    })
    .into()
}

const FE_TOL: f64 = 1e-9;
const DEFAULT_TOL: f64 = 1e-8;
const EXACT_TOL: f64 = 1e-10;

pub(super) static ENTRIES: &[Entry] = &[
    Entry {
        id: "GAMMA-X-REC",
        statement: "γ(x+1) = γ(x) − 1/x",
        arity: &["x"],
        constraints: "|x| ≤ 6, x and x+1 at least 0.1 from {0,−1,…}",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["euler_gamma_x"],
        grid: "x uniform in the disc |x| ≤ 6",
        notes: "",
        check: gamma_x_rec,
    },
    Entry {
        id: "GAMMA-X-DIGAMMA",
        statement: "γ(x) = −ψ(x)",
        arity: &["x"],
        constraints: "|x| ≤ 6, x at least 0.1 from {0,−1,…}",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["euler_gamma_x", "digamma"],
        grid: "x uniform in the disc |x| ≤ 6",
        notes: "",
        check: gamma_x_digamma,
    },
    Entry {
        id: "STIELTJES-0",
        statement: "γ(x) = lim_N [Σ_{k=0}^{N} 1/(x+k) − log(x+N)]",
        arity: &["x"],
        constraints: "|x| ≤ 6, x at least 0.1 from {0,−1,…}",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["euler_gamma_x", "stieltjes_zeroth"],
        grid: "x uniform in the disc |x| ≤ 6",
        notes: "",
        check: stieltjes,
    },
    Entry {
        id: "G-SHIFT-Z",
        statement: "G(x,z−1) = (z+x−1) e^{γ(x)} G(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, x at least 0.1 from {0,−1,…}",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["g_product", "euler_gamma_x"],
        grid: "x, z uniform in discs of radius 6; residual relative to max(1,|G(x,z−1)|)",
        notes: "",
        check: g_shift_z,
    },
    Entry {
        id: "G-SHIFT-X",
        statement: "G(x−1,z) = ((z+x−1)/(x−1)) e^{−z/(x−1)} G(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, x and x−1 at least 0.1 from {0,−1,…}",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["g_product"],
        grid: "x, z uniform in discs of radius 6; residual relative to max(1,|G(x−1,z)|)",
        notes: "",
        check: g_shift_x,
    },
    Entry {
        id: "G-SIN-literal",
        statement: "G(x,−z) G(−x,z) = ((z−x) sin π(z−x) / (x sin πx)) e^{z cot(πx) + z/x}",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Literal,
        operations: &["g_product"],
        grid: "Re x ∈ [−3,3], |Im x| ≤ 1, |z| ≤ 2",
        notes: "Exponent as printed, without the factor π on the cotangent; see G-SIN-pi.",
        check: g_sin_literal,
    },
    Entry {
        id: "G-SIN-pi",
        statement: "G(x,−z) G(−x,z) = ((z−x) sin π(z−x) / (x sin πx)) e^{πz cot(πx) + z/x}",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Corrected,
        operations: &["g_product"],
        grid: "Re x ∈ [−3,3], |Im x| ≤ 1, |z| ≤ 2",
        notes: "Differentiating log of both sides at z = 0 gives 1/x + π cot(πx), so the cotangent carries a factor π.",
        check: g_sin_pi,
    },
    Entry {
        id: "SIN2-PRODUCT",
        statement: "∏_{n≥1} (1 − z²/(n+x)²)(1 − z²/(n−x)²) = (x/sin πx)² (sin² πz − sin² πx)/(z² − x²)",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ, |z² − x²| ≥ 0.1",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Standard,
        operations: &["sin2_product_residual"],
        grid: "Re x ∈ [−3,3], |Im x| ≤ 1, |z| ≤ 3",
        notes: "",
        check: sin2,
    },
    Entry {
        id: "FE-z",
        statement: "Γ(x,z+1) = (z+x−1) Γ(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, both Γ factors at least 0.1 from their poles",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 6",
        notes: "",
        check: fe_z,
    },
    Entry {
        id: "FE-x",
        statement: "Γ(x+1,z) = ((z+x−1)/x) Γ(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, both Γ factors at least 0.1 from their poles",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 6",
        notes: "",
        check: fe_x,
    },
    Entry {
        id: "FE-xz",
        statement: "Γ(x+1,z+1) = ((z+x−1)(z+x)/x) Γ(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, both Γ factors at least 0.1 from their poles",
        tolerance: FE_TOL,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 6",
        notes: "",
        check: fe_xz,
    },
    Entry {
        id: "SPECIAL-INT",
        statement: "Γ(x,1) = 1; Γ(x,0) = 1/(x−1); Γ(x,n) = (x)_{n−1}; Γ(x,−n) = 1/(x−n−1)_{n+1}; Γ(n,z) = ((z)_{n−1}/(n−1)!) Γ(z)",
        arity: &["x", "z"],
        constraints: "Re x > 0 at least 0.1 from ℤ, n ∈ {2,…,6}, z clear of the poles of Γ(z) and Γ(n,z)",
        tolerance: EXACT_TOL,
        default_points: 20,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass", "pochhammer", "gamma_classical"],
        grid: "Re x ∈ [0.05,6], |Im x| ≤ 2, |z| ≤ 4; each point checks all five forms for n = 2…6",
        notes: "",
        check: special_int,
    },
    Entry {
        id: "CLASSICAL-LIMIT",
        statement: "Γ(1,z) = Γ(z)",
        arity: &["z"],
        constraints: "z at least 0.1 from {0,−1,…}",
        tolerance: EXACT_TOL,
        default_points: 50,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass", "gamma_classical"],
        grid: "z ∈ {0.5, 1, 1.5, 2.5, 4, 0.5+0.5i, 2−i} plus uniform in |z| ≤ 6",
        notes: "",
        check: classical_limit,
    },
    Entry {
        id: "CONJ",
        statement: "Γ(x̄,z̄) = conj Γ(x,z)",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 6, at least 0.1 from the poles",
        tolerance: 1e-12,
        default_points: 200,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 6",
        notes: "",
        check: conj,
    },
    Entry {
        id: "REFLECT-A",
        statement: "Γ(x,1−z) Γ(1−x,z) (z−x) sin π(z−x) = −sin πx",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ, |x|,|z| ≤ 4, all Γ factors clear of poles",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass", "sin_pi"],
        grid: "x, z uniform in discs of radius 4",
        notes: "",
        check: reflect_a,
    },
    Entry {
        id: "REFLECT-B-literal",
        statement: "Γ(x,z) Γ(−x,−z) ((z+x)³ − (z+x)) sin π(z+x) = −x sin πx",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ, |x|,|z| ≤ 4, all Γ factors clear of poles",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Literal,
        operations: &["gamma_weierstrass", "sin_pi"],
        grid: "x, z uniform in discs of radius 4",
        notes: "Statement as printed. It is the image of REFLECT-B-proof under z → −z, so both readings hold.",
        check: reflect_b_literal,
    },
    Entry {
        id: "REFLECT-B-proof",
        statement: "Γ(−x,z) Γ(x,−z) ((z−x)³ − (z−x)) sin π(z−x) = −x sin πx",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ℤ, |x|,|z| ≤ 4, all Γ factors clear of poles",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Corrected,
        operations: &["gamma_weierstrass", "sin_pi"],
        grid: "x, z uniform in discs of radius 4",
        notes: "Form obtained from REFLECT-A with the shifts in x and z.",
        check: reflect_b_proof,
    },
    Entry {
        id: "LIMIT-NEG",
        statement: "Γ(−n+ε, z) = O(ε), with Γ(−n+ε, z)/ε → (−1)^n n! Γ(z−n−1)",
        arity: &["n", "z"],
        constraints: "n ∈ {0,1,2}, |z| ≤ 4, z−n−1 at least 0.1 from {0,−1,…}",
        tolerance: 1e-6,
        default_points: 60,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass", "gamma_classical"],
        grid: "n cycles through 0,1,2; |z| ≤ 4; ε = r e^{iθ} with r ∈ {1e-4, 1e-5} combined by Richardson, θ ∈ {π/4, 3π/4, 5π/4, 7π/4}",
        notes: "",
        check: limit_neg,
    },
    Entry {
        id: "NORM",
        statement: "|Γ(n+i,n+i)|² from |Γ(i,i)|² = e^π/(10(e^{2π}+1)) by Γ(x+1,z+1) = ((z+x−1)(z+x)/x) Γ(x,z)",
        arity: &["n"],
        constraints: "n ∈ {0,1,2,3}",
        tolerance: FE_TOL,
        default_points: 4,
        reading: Reading::Standard,
        operations: &["gaussian_norm", "gamma_weierstrass"],
        grid: "fixed n = 0…3; compares the recurrence with |Γ(n±i,n±i)|² from the product",
        notes: "The closed product 5 ∏_{k=0}^{2n−2}(4+k²)/∏_{k=0}^{n−1}(1+k²) matches for n ≥ 1 and is 5 times the base value at n = 0.",
        check: norm,
    },
    Entry {
        id: "EULER-LIMIT",
        statement: "Γ(x,z) = lim_n n^z (x)_n / (z+x−1)_{n+1}",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 4, at least 0.1 from the poles",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Standard,
        operations: &["gamma_euler_limit", "gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 4",
        notes: "",
        check: euler_limit,
    },
    Entry {
        id: "EULER-PRODUCT",
        statement: "Γ(x,z) = (x/((z+x−1)(z+x))) ∏_{n≥1} (1+1/n)^z (1+z/(x+n))^{−1}",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 4, at least 0.1 from the poles",
        tolerance: DEFAULT_TOL,
        default_points: 100,
        reading: Reading::Standard,
        operations: &["gamma_euler_product", "gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 4",
        notes: "",
        check: euler_product,
    },
    Entry {
        id: "DUP",
        statement: "Γ(x,z) Γ(x+z,−z) (x−1)(z+x−1) = 1",
        arity: &["x", "z"],
        constraints: "|x|,|z| ≤ 5, both Γ factors clear of poles",
        tolerance: FE_TOL,
        default_points: 100,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "x, z uniform in discs of radius 5",
        notes: "",
        check: dup,
    },
    Entry {
        id: "HALF-INT",
        statement: "Γ(k+½, l+½) = 2/(√π(2k−1)) · (2l+2)!/((−4)^{l+1}(l+1)!) · (k+l−1)!/(−l−½)_{k+l}",
        arity: &["k", "l"],
        constraints: "0 ≤ k,l ≤ 4, k+l ≥ 1",
        tolerance: FE_TOL,
        default_points: 24,
        reading: Reading::Standard,
        operations: &["half_integer_value", "gamma_weierstrass"],
        grid: "every k, l ∈ {0,…,4} with k+l ≥ 1",
        notes: "Includes k = 0, where the leading factor 1/(2k−1) is −1.",
        check: half_int,
    },
    Entry {
        id: "RESIDUE",
        statement: "Res_{z=−(x+m)} Γ(x,z) = (−1)^{m+1} (x)_{2m+1}/((m+1)! Γ(x+2m+1)), and 1/Γ(x) for m = −1",
        arity: &["x", "m"],
        constraints: "x ∈ {1.3, 2.5, 0.7+0.2i, 1}, m ∈ {−1,0,1,2}",
        tolerance: 1e-6,
        default_points: 16,
        reading: Reading::Standard,
        operations: &["residue_at", "gamma_weierstrass"],
        grid: "(z+x+m)Γ(x,z) averaged over four directions on circles of radius 1e-2, 1e-3, 1e-4, 1e-5; x = 1 is also compared with (−1)^{m+1}/(m+1)!",
        notes: "",
        check: residue,
    },
    Entry {
        id: "MULT-CONST",
        statement: "n^{nz} Γ(x,z)Γ(x,z+1/n)⋯Γ(x,z+(n−1)/n) / (n Γ(n(x−1)+1, nz)) is independent of z (n = 2)",
        arity: &["x", "z1", "z2"],
        constraints: "every Γ factor at both z1 and z2 at least 0.1 from its poles",
        tolerance: DEFAULT_TOL,
        default_points: 20,
        reading: Reading::Standard,
        operations: &["mult_const_check", "gamma_weierstrass"],
        grid: "Re x ∈ [0.6,3], Re z ∈ [0.1,2.5], imaginary parts in [−0.5,0.5]",
        notes: "",
        check: mult_const,
    },
    Entry {
        id: "GAUSS-2",
        statement: "Γ(x,z)Γ(x,z+½)Γ(1−x,z)Γ(1−x,z+½) = 2^{2−4z} Γ(2x−1,2z) Γ(1−2x,2z) tan(πx)/(x−½)",
        arity: &["x", "z"],
        constraints: "x at least 0.1 from ½ℤ, all six Γ factors clear of poles",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Standard,
        operations: &["gauss2_check", "gamma_weierstrass"],
        grid: "Re x ∈ [−2,3], |Im x| ≤ 1, |z| ≤ 3",
        notes: "",
        check: gauss2,
    },
    Entry {
        id: "STIRLING-EXACT",
        statement: "log Γ(x,z) = (z+x−3/2) log(z+x−1) − z + 1 − (x−½) log x + I(x) − I(z+x−1)",
        arity: &["x", "z"],
        constraints: "real x, z ∈ (0.05, 30), z+x−1 > 0.1",
        tolerance: FE_TOL,
        default_points: 50,
        reading: Reading::Standard,
        operations: &["gamma_stirling_log", "i_integral", "gamma_weierstrass"],
        grid: "x, z uniform in (0.05, 30)",
        notes: "",
        check: stirling_exact,
    },
    Entry {
        id: "STIRLING-ASYMPT-X",
        statement: "Γ(x,z) / [(z+x−1)^{z+x−3/2} e^{1−z} x^{½−x}] → 1 as x → ∞ (z = 2)",
        arity: &["x"],
        constraints: "x ∈ {10,20,40,80}, z = 2",
        tolerance: 1.0,
        default_points: 4,
        reading: Reading::Standard,
        operations: &["gamma_weierstrass"],
        grid: "residual x·|ratio − 1|; the deviation must also decrease",
        notes: "",
        check: stirling_asympt_x,
    },
    Entry {
        id: "STIRLING-ASYMPT-Z-literal",
        statement: "Γ(x,z) ∼ (z+x−1)^{z+x−3/2} e^{1−z} x^{½−x} + I(x) as z → ∞ (x = ½)",
        arity: &["z"],
        constraints: "z ∈ {10,20,40,80}, x = ½",
        tolerance: 1.0,
        default_points: 4,
        reading: Reading::Literal,
        operations: &["gamma_weierstrass", "i_integral"],
        grid: "residual z·|ratio − 1|",
        notes: "Additive I(x) as printed; the ratio tends to e^{I(x)}, not 1.",
        check: stirling_asympt_z_literal,
    },
    Entry {
        id: "STIRLING-ASYMPT-Z-exp",
        statement: "Γ(x,z) ∼ (z+x−1)^{z+x−3/2} e^{1−z} x^{½−x} e^{I(x)} as z → ∞ (x = ½)",
        arity: &["z"],
        constraints: "z ∈ {10,20,40,80}, x = ½",
        tolerance: 1.0,
        default_points: 4,
        reading: Reading::Corrected,
        operations: &["gamma_weierstrass", "i_integral"],
        grid: "residual z·|ratio − 1|; the deviation must also decrease",
        notes: "Follows from the exact formula since I(z+x−1) → 0.",
        check: stirling_asympt_z_exp,
    },
    Entry {
        id: "SERIES-Z",
        statement: "log Γ(x,z+1) = −zγ(x) − Σ_{m≥2} ((−1)^{m−1}/m) ζ(m,x) z^m",
        arity: &["x", "z"],
        constraints: "Re x ∈ [0.3,4], |Im x| ≤ 1, |z| ≤ min(1,|x|)/2",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Standard,
        operations: &["log_series_in_z", "gamma_weierstrass"],
        grid: "32 terms",
        notes: "",
        check: series_z,
    },
    Entry {
        id: "COEFF-A-literal",
        statement: "m a_m = −γ(x) a_{m−1} + Σ_{k=0}^{m−2} (−1)^m ζ(m−k,x) a_k",
        arity: &["x", "z"],
        constraints: "as SERIES-Z",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Literal,
        operations: &["coeffs_a", "gamma_weierstrass"],
        grid: "Σ_{m≤32} a_m z^m against Γ(x,z+1)",
        notes: "Sign (−1)^m as printed; coefficients agree up to m = 2 and differ from m = 3 on.",
        check: |s, n, p| coeff_a(s, n, p, true),
    },
    Entry {
        id: "COEFF-A-derived",
        statement: "m a_m = −γ(x) a_{m−1} + Σ_{k=0}^{m−2} (−1)^{m−k} ζ(m−k,x) a_k",
        arity: &["x", "z"],
        constraints: "as SERIES-Z",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Corrected,
        operations: &["coeffs_a", "gamma_weierstrass"],
        grid: "Σ_{m≤32} a_m z^m against Γ(x,z+1)",
        notes: "Cauchy product of Σ a_m z^m with the derivative of the logarithmic series.",
        check: |s, n, p| coeff_a(s, n, p, false),
    },
    Entry {
        id: "SERIES-X-literal",
        statement: "log Γ(x+1,z) = log(zΓ(z)) + Σ_{n≥2} z(x−1)/(n(n+z)) + Σ_{m≥2} ((−1)^m/m)(ζ(m,z) − ζ(m) − z^{−m} + 1)(x−1)^m",
        arity: &["x", "z"],
        constraints: "Re z ∈ [0.2,4], |Im z| ≤ 1, |x−1| ≤ min(1,|z+1|)/2",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Literal,
        operations: &["log_series_in_x", "gamma_weierstrass"],
        grid: "32 terms",
        notes: "Linear coefficient as printed; it exceeds ψ(z+1) + γ − 1 by 1/(z+1).",
        check: |s, n, p| series_x(s, n, p, true),
    },
    Entry {
        id: "SERIES-X-derived",
        statement: "log Γ(x+1,z) = log(zΓ(z)) + (ψ(z+1) + γ − 1)(x−1) + Σ_{m≥2} ((−1)^m/m)(ζ(m,z) − ζ(m) − z^{−m} + 1)(x−1)^m",
        arity: &["x", "z"],
        constraints: "Re z ∈ [0.2,4], |Im z| ≤ 1, |x−1| ≤ min(1,|z+1|)/2",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Corrected,
        operations: &["log_series_in_x", "gamma_weierstrass"],
        grid: "32 terms",
        notes: "Keeps the −log(1 + (x−1)/(z+1)) term, whose linear part is −(x−1)/(z+1).",
        check: |s, n, p| series_x(s, n, p, false),
    },
    Entry {
        id: "COEFF-B-literal",
        statement: "b_m = b_{m−1}/m + Σ_{n≥2} z/(n(n+z)) + (1/m) Σ_{k=0}^{m−2} (−1)^{m−k} b_k (ζ(m−k,z) − ζ(m−k) − z^{−(m−k)} + 1)",
        arity: &["x", "z"],
        constraints: "as SERIES-X",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Literal,
        operations: &["coeffs_b", "gamma_weierstrass"],
        grid: "Σ_{m≤32} b_m (x−1)^m against Γ(x+1,z)",
        notes: "Recursion as printed: the linear coefficient is added rather than multiplied.",
        check: |s, n, p| coeff_b(s, n, p, true),
    },
    Entry {
        id: "COEFF-B-derived",
        statement: "m b_m = c(z) b_{m−1} + Σ_{k=0}^{m−2} (−1)^{m−k} (ζ(m−k,z) − ζ(m−k) − z^{−(m−k)} + 1) b_k, c(z) = ψ(z+1) + γ − 1",
        arity: &["x", "z"],
        constraints: "as SERIES-X",
        tolerance: DEFAULT_TOL,
        default_points: 50,
        reading: Reading::Corrected,
        operations: &["coeffs_b", "gamma_weierstrass"],
        grid: "Σ_{m≤32} b_m (x−1)^m against Γ(x+1,z)",
        notes: "",
        check: |s, n, p| coeff_b(s, n, p, false),
    },
];
