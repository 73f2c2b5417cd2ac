//! Double-exponential (tanh-sinh) quadrature on the unit interval.
//!
//! The substitution t = (1 + tanh((pi/2) sinh(u)))/2 maps (0,1) to the real
//! line and makes the trapezoid rule converge super-algebraically, including
//! for integrands with algebraic endpoint singularities of exponent > -1.
//!
//! Integrands receive both the abscissa `t` and the distance `1 - t` to the
//! right endpoint. Near t = 1 the abscissa alone carries no information
//! (it rounds to 1.0 in f64 long before the weights become negligible), so
//! singular factors must be built from the distance argument.

use crate::error::{Error, Result};
use serde::Serialize;

/// Settings for [`integrate_unit_interval`].
#[derive(Debug, Clone, Serialize)]
pub struct QuadratureConfig {
    /// Target relative tolerance of the result.
    pub target_rel_tol: f64,
    /// Maximum number of step-halving refinement levels.
    pub max_levels: usize,
    /// Absolute floor added to the convergence test so integrals that are
    /// exactly zero can converge.
    pub abs_floor: f64,
}

impl QuadratureConfig {
    pub fn new(target_rel_tol: f64, max_levels: usize, abs_floor: f64) -> Result<Self> {
        if !(target_rel_tol > 1e-15 && target_rel_tol < 1e-2) {
            return Err(Error::domain(format!(
                "target_rel_tol must lie in (1e-15, 1e-2), got {target_rel_tol:e}"
            )));
        }
        if !(4..=16).contains(&max_levels) {
            return Err(Error::domain(format!(
                "max_levels must lie in [4, 16], got {max_levels}"
            )));
        }
        if !(abs_floor > 0.0) {
            return Err(Error::domain("abs_floor must be positive".to_string()));
        }
        Ok(QuadratureConfig {
            target_rel_tol,
            max_levels,
            abs_floor,
        })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            target_rel_tol: 1e-11,
            max_levels: 12,
            abs_floor: 1e-300,
        }
    }
}

/// Value and error estimate of a quadrature.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error_estimate: f64,
    pub levels_used: usize,
}

// Truncation of the u-axis. At |u| = 6 the node weights are ~1e-273 and the
// endpoint distances ~1e-276, both still representable, so no underflow
// occurs and the omitted tail is negligible for exponents > -0.9.
const U_MAX: f64 = 6.0;

struct Node {
    t: f64,
    one_minus_t: f64,
    weight: f64,
}

/// Node at u, mapped to (0,1). Returns None once the weight underflows.
fn node_at(u: f64) -> Option<Node> {
    let sinh_u = u.sinh();
    let z = std::f64::consts::FRAC_PI_2 * sinh_u;
    // t = 1/(1 + e^{-2z}) and 1-t = 1/(1 + e^{2z}): evaluate each from its
    // numerically small side so both endpoint distances stay accurate.
    let (t, one_minus_t) = if z >= 0.0 {
        let em = (-2.0 * z).exp();
        (1.0 / (1.0 + em), em / (1.0 + em))
    } else {
        let ep = (2.0 * z).exp();
        (ep / (1.0 + ep), 1.0 / (1.0 + ep))
    };
    let cosh_z = z.cosh();
    let weight = std::f64::consts::FRAC_PI_4 * u.cosh() / (cosh_z * cosh_z);
    if weight == 0.0 || !weight.is_finite() || t == 0.0 || one_minus_t == 0.0 {
        return None;
    }
    Some(Node {
        t,
        one_minus_t,
        weight,
    })
}

/// Integrate f over (0, 1); the integrand receives `(t, 1 - t)`.
pub fn integrate_unit_interval_with_distance<F>(
    f: F,
    config: &QuadratureConfig,
) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> f64,
{
    let eval = |u: f64| -> Result<f64> {
        match node_at(u) {
            None => Ok(0.0),
            Some(n) => {
                let fv = f(n.t, n.one_minus_t);
                if !fv.is_finite() {
                    return Err(Error::domain(format!(
                        "integrand returned a non-finite value at t = {} (1-t = {:e})",
                        n.t, n.one_minus_t
                    )));
                }
                Ok(n.weight * fv)
            }
        }
    };

    // Level 0: h = 1, nodes at integer u. The symmetric node pair (u, -u)
    // swaps t and 1-t.
    let mut h = 1.0;
    let mut sum = eval(0.0)?;
    let mut j = 1;
    while (j as f64) * h <= U_MAX {
        let u = (j as f64) * h;
        sum += eval(u)? + eval(-u)?;
        j += 1;
    }
    let mut value = sum * h;
    let mut error_estimate = f64::INFINITY;

    for level in 1..=config.max_levels {
        h *= 0.5;
        // New nodes sit at odd multiples of the new step.
        let mut odd_sum = 0.0;
        let mut j = 1;
        while (j as f64) * h <= U_MAX {
            let u = (j as f64) * h;
            odd_sum += eval(u)? + eval(-u)?;
            j += 2;
        }
        let new_value = 0.5 * value + odd_sum * h;
        error_estimate = (new_value - value).abs();
        value = new_value;
        if level >= 3 && error_estimate <= config.target_rel_tol * value.abs() + config.abs_floor {
            return Ok(QuadratureResult {
                value,
                error_estimate,
                levels_used: level,
            });
        }
    }

    Err(Error::QuadratureNotConverged {
        error_estimate,
        levels: config.max_levels,
    })
}

/// Integrate f over (0, 1).
///
/// For integrands that are singular at t = 1, prefer
/// [`integrate_unit_interval_with_distance`]: the plain abscissa loses all
/// precision near that endpoint.
pub fn integrate_unit_interval<F>(f: F, config: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_unit_interval_with_distance(|t, _| f(t), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integrates_to_one() {
        let r = integrate_unit_interval(|_| 1.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13, "got {}", r.value);
    }

    #[test]
    fn smooth_sine() {
        let r = integrate_unit_interval(|t| t.sin(), &QuadratureConfig::default()).unwrap();
        let exact = 1.0 - 1.0f64.cos(); // 0.45969769413186023
        assert!((r.value - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn inverse_fourth_root_singularity() {
        // (1-t^2)^(-1/4); exact value (sqrt(pi)/2) Gamma(3/4)/Gamma(5/4).
        let r = integrate_unit_interval_with_distance(
            |t, omt| (omt * (1.0 + t)).powf(-0.25),
            &QuadratureConfig::default(),
        )
        .unwrap();
        let exact = 1.1981402347355923;
        assert!(
            (r.value - exact).abs() / exact < 1e-10,
            "got {} want {}",
            r.value,
            exact
        );
    }

    #[test]
    fn zero_integrand_converges() {
        let r = integrate_unit_interval(|_| 0.0, &QuadratureConfig::default()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn config_bounds_rejected() {
        assert!(QuadratureConfig::new(0.5, 10, 1e-300).is_err());
        assert!(QuadratureConfig::new(1e-11, 2, 1e-300).is_err());
        assert!(QuadratureConfig::new(1e-11, 10, 0.0).is_err());
        assert!(QuadratureConfig::new(1e-11, 10, 1e-300).is_ok());
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let err = integrate_unit_interval(|t| 1.0 / (t - 0.5), &QuadratureConfig::default());
        assert!(err.is_err());
    }
}
