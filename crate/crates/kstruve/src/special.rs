//! The k-gamma function family on real arguments: Gamma_k, its logarithm,
//! the k-digamma and k-trigamma functions and the k-beta function.
//!
//! Everything reduces to classical kernels through the scaling identity
//! Gamma_k(x) = k^(x/k - 1) Gamma(x/k) and its logarithmic derivatives:
//! Psi_k(t) = (ln k + psi(t/k)) / k and Psi_k'(t) = psi'(t/k) / k^2.
//!
//! The classical kernels are Stirling-series evaluations with argument
//! shifting, accurate to a few ulp over the ranges exercised here; the
//! double-double kernels in [`crate::numerics::dd`] serve as their
//! independent accuracy check.

use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015329;
/// Square root of pi.
pub const SQRT_PI: f64 = 1.7724538509055159;

/// Absolute distance to a pole below which evaluation is refused.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Validated deformation parameter k > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KParam(f64);

impl KParam {
    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 {
            Ok(KParam(k))
        } else {
            Err(Error::domain(format!("k must be positive, got {k}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

// Stirling series coefficients B_{2j} / (2j (2j-1)), j = 1..=8, used for
// ln Gamma at arguments >= 10.
const LN_GAMMA_SERIES: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

// B_{2j} / (2j), j = 1..=8, for the digamma asymptotic series.
const DIGAMMA_SERIES: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

// B_{2j}, j = 1..=8, for the trigamma asymptotic series.
const TRIGAMMA_SERIES: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const HALF_LN_TWO_PI: f64 = 0.9189385332046727;

fn stirling_series(y: f64) -> f64 {
    let inv2 = 1.0 / (y * y);
    let mut s = 0.0;
    for c in LN_GAMMA_SERIES.iter().rev() {
        s = s * inv2 + c;
    }
    s / y
}

/// y^(y-1/2) e^(-y), split into two factors when the power alone would
/// overflow (y above ~143).
fn stirling_power(y: f64) -> f64 {
    if (y - 0.5) * y.ln() < 700.0 {
        y.powf(y - 0.5) * (-y).exp()
    } else {
        let half = y.powf(0.5 * (y - 0.5)) * (-0.5 * y).exp();
        half * half
    }
}

/// sin(pi x) with the argument reduced modulo 2 before multiplication by pi.
fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r < 0.5 {
        (std::f64::consts::PI * r).sin()
    } else if r < 1.0 {
        (std::f64::consts::PI * (1.0 - r)).sin()
    } else if r < 1.5 {
        -(std::f64::consts::PI * (r - 1.0)).sin()
    } else {
        -(std::f64::consts::PI * (2.0 - r)).sin()
    }
}

/// Gamma(x) for real non-pole x. Returns NaN at the poles 0, -1, -2, ...;
/// overflows to +/- infinity outside the finite range.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.5 {
        if x == x.floor() {
            return f64::NAN; // pole
        }
        return std::f64::consts::PI / (sin_pi(x) * gamma(1.0 - x));
    }
    let mut product = 1.0;
    let mut y = x;
    while y < 10.0 {
        product *= y;
        y += 1.0;
    }
    let stirling =
        stirling_power(y) * (2.0 * std::f64::consts::PI).sqrt() * stirling_series(y).exp();
    stirling / product
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma requires x > 0");
    let mut product = 1.0;
    let mut y = x;
    while y < 10.0 {
        product *= y;
        y += 1.0;
    }
    (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + stirling_series(y) - product.ln()
}

/// Digamma psi(x) for x > 0.
pub fn digamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "digamma requires x > 0");
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut s = 0.0;
    for c in DIGAMMA_SERIES.iter().rev() {
        s = s * inv2 + c;
    }
    shift + y.ln() - 0.5 * inv - s * inv2
}

/// Trigamma psi'(x) for x > 0.
pub fn trigamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "trigamma requires x > 0");
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut s = 0.0;
    for c in TRIGAMMA_SERIES.iter().rev() {
        s = s * inv2 + c;
    }
    shift + inv + 0.5 * inv2 + s * inv2 * inv
}

/// Index and location of the pole of Gamma_k nearest to x (poles sit at
/// x = -n k for n = 0, 1, 2, ...).
fn nearest_pole(x: f64, k: f64) -> f64 {
    let n = (-x / k).round().max(0.0);
    -n * k
}

/// The k-gamma function Gamma_k(x) = k^(x/k - 1) Gamma(x/k).
///
/// Defined for real x away from the poles at 0, -k, -2k, ...; relative
/// accuracy is a few ulp for x/k in [1e-3, 170].
pub fn k_gamma(x: f64, k: f64) -> Result<f64> {
    let k = KParam::new(k)?.get();
    let pole = nearest_pole(x, k);
    if (x - pole).abs() <= POLE_TOLERANCE {
        return Err(Error::Pole {
            function: "k_gamma",
            x,
            pole,
            tol: POLE_TOLERANCE,
        });
    }
    let z = x / k;
    let g = gamma(z);
    let value = k.powf(z - 1.0) * g;
    if value.is_infinite() || g.is_infinite() {
        return Err(Error::Overflow {
            function: "k_gamma",
            signed_infinity: if g < 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            },
        });
    }
    Ok(value)
}

/// ln Gamma_k(x) = (x/k - 1) ln k + ln Gamma(x/k), for x > 0.
pub fn log_k_gamma(x: f64, k: f64) -> Result<f64> {
    let k = KParam::new(k)?.get();
    if x <= 0.0 {
        return Err(Error::domain(format!(
            "log_k_gamma requires x > 0, got x = {x}"
        )));
    }
    Ok((x / k - 1.0) * k.ln() + ln_gamma(x / k))
}

/// The k-digamma function Psi_k(t) = (ln k + psi(t/k)) / k, for t > 0.
///
/// Negative non-pole arguments are outside the supported domain.
pub fn k_digamma(t: f64, k: f64) -> Result<f64> {
    let k = KParam::new(k)?.get();
    let pole = nearest_pole(t, k);
    if (t - pole).abs() <= POLE_TOLERANCE {
        return Err(Error::Pole {
            function: "k_digamma",
            x: t,
            pole,
            tol: POLE_TOLERANCE,
        });
    }
    if t < 0.0 {
        return Err(Error::domain(format!(
            "k_digamma is implemented for t > 0 only, got t = {t}"
        )));
    }
    Ok((k.ln() + digamma(t / k)) / k)
}

/// The k-trigamma function Psi_k'(t) = psi'(t/k) / k^2 = sum 1/(nk+t)^2,
/// for t > 0. Always positive.
pub fn k_trigamma(t: f64, k: f64) -> Result<f64> {
    let k = KParam::new(k)?.get();
    if t <= 0.0 {
        return Err(Error::domain(format!(
            "k_trigamma requires t > 0, got t = {t}"
        )));
    }
    Ok(trigamma(t / k) / (k * k))
}

/// The k-beta function B_k(x, y) = Gamma_k(x) Gamma_k(y) / Gamma_k(x+y),
/// for x, y > 0, evaluated in log space.
pub fn k_beta(x: f64, y: f64, k: f64) -> Result<f64> {
    if x <= 0.0 || y <= 0.0 {
        return Err(Error::domain(format!(
            "k_beta requires x > 0 and y > 0, got x = {x}, y = {y}"
        )));
    }
    Ok((log_k_gamma(x, k)? + log_k_gamma(y, k)? - log_k_gamma(x + y, k)?).exp())
}
