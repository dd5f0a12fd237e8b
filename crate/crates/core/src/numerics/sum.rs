use num_complex::Complex64;

/// Neumaier-compensated complex accumulator that also tracks the sum of
/// absolute term magnitudes, which feeds rounding-error estimates.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
    abs_sum: f64,
    terms: usize,
}

#[inline]
fn two_sum(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        self.add_with_magnitude(x, x.norm());
    }

    /// Adds `x`, recording `magnitude` as the size of the quantities that were
    /// combined to produce it (for terms formed by cancellation).
    #[inline]
    pub fn add_with_magnitude(&mut self, x: Complex64, magnitude: f64) {
        two_sum(&mut self.sum.re, &mut self.comp.re, x.re);
        two_sum(&mut self.sum.im, &mut self.comp.im, x.im);
        self.abs_sum += magnitude;
        self.terms += 1;
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }

    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    pub fn terms(&self) -> usize {
        self.terms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_low_order_bits() {
        let mut s = CompensatedSum::new();
        s.add(Complex64::new(1.0, -1.0));
        for _ in 0..10_000 {
            s.add(Complex64::new(1e-16, 1e-16));
        }
        s.add(Complex64::new(-1.0, 1.0));
        assert!((s.value().re - 1e-12).abs() < 1e-22);
        assert!((s.value().im - 1e-12).abs() < 1e-22);
        assert_eq!(s.terms(), 10_002);
    }
}
