//! Shared numerical machinery: tanh-sinh quadrature, compensated summation,
//! centered finite differences, double-double arithmetic and the
//! extended-precision series oracle that mints reference values.

pub mod dd;
mod oracle;
mod quadrature;

pub use dd::{gamma_dd, ln_gamma_dd, Dd, DD_EPSILON};
pub use oracle::{oracle_struve_sum, OracleSum};
pub use quadrature::{
    integrate_unit_interval, integrate_unit_interval_with_distance, QuadratureConfig,
    QuadratureResult,
};

/// Kahan-Neumaier compensated sum of a finite sequence.
///
/// The result is within a couple of ulp of the exact sum of the given
/// binary64 terms, independent of cancellation between them.
pub fn compensated_sum(terms: &[f64]) -> f64 {
    let mut acc = NeumaierSum::new();
    for &t in terms {
        acc.add(t);
    }
    acc.total()
}

/// Streaming Kahan-Neumaier accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Centered finite difference of order 1 or 2.
///
/// Step sizes are the standard eps^(1/3) and eps^(1/4) scalings, balancing
/// truncation against rounding; expect ~1e-10 (order 1) and ~1e-7 (order 2)
/// relative accuracy for well-scaled smooth functions.
pub fn central_difference<F>(f: F, x: f64, order: u8) -> f64
where
    F: Fn(f64) -> f64,
{
    let scale = x.abs().max(1.0);
    match order {
        1 => {
            let h = f64::EPSILON.powf(1.0 / 3.0) * scale;
            (f(x + h) - f(x - h)) / (2.0 * h)
        }
        2 => {
            let h = f64::EPSILON.powf(0.25) * scale;
            (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        }
        _ => panic!("central_difference supports orders 1 and 2 only"),
    }
}
