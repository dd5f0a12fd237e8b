use num_complex::Complex64;
use std::f64::consts::PI;

/// `(sin πa, cos πa)` with exact results at integers and half-integers.
fn sin_cos_pi_real(a: f64) -> (f64, f64) {
    let n = (2.0 * a).round();
    let r = a - 0.5 * n;
    let (s, c) = (PI * r).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let b = PI * z.im;
    Complex64::new(s * b.cosh(), c * b.sinh())
}

pub fn cos_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let b = PI * z.im;
    Complex64::new(c * b.cosh(), -s * b.sinh())
}

// sin and cos divided by cosh(πb); stays finite for any imaginary part.
fn scaled_sin_cos_pi(z: Complex64) -> (Complex64, Complex64) {
    let (s, c) = sin_cos_pi_real(z.re);
    let t = (PI * z.im).tanh();
    (Complex64::new(s, c * t), Complex64::new(c, -s * t))
}

pub fn cot_pi(z: Complex64) -> Complex64 {
    let (s, c) = scaled_sin_cos_pi(z);
    c / s
}

pub fn tan_pi(z: Complex64) -> Complex64 {
    let (s, c) = scaled_sin_cos_pi(z);
    s / c
}
