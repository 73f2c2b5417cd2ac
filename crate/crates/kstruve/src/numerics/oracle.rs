//! Extended-precision reference summation of the k-Struve series.
//!
//! Every term is constructed independently from the defining formula (ratio
//! recurrences are deliberately avoided so this path shares no algorithm
//! with the production evaluator it is used to check): the r-th coefficient
//! comes from fresh double-double log-gamma evaluations, and the terms are
//! accumulated in double-double arithmetic.

use crate::error::{Error, Result};
use crate::numerics::dd::{ln_gamma_dd, Dd};
use crate::struve::StruveParams;

/// Reference value of a truncated k-Struve sum.
#[derive(Debug, Clone, Copy)]
pub struct OracleSum {
    /// The truncated sum at double-double precision.
    pub value: Dd,
    /// Geometric bound on the omitted tail, infinite if the term ratio has
    /// not yet dropped below one at the truncation index.
    pub tail_bound: f64,
    pub terms_used: usize,
}

impl OracleSum {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// ln of |term_r| together with its sign.
fn term_dd(params: &StruveParams, r: usize, ln_half_x: Dd, nu_over_k: Dd, ln_abs_c: Dd) -> Dd {
    let (k, c) = (params.k(), params.c());
    let rf = r as f64;
    // Gamma_k(rk + nu + 3k/2) = k^(r + nu/k + 1/2) * Gamma(r + nu/k + 3/2).
    let gamma_k_arg = nu_over_k + rf + 1.5;
    let ln_gamma_k = (gamma_k_arg - 1.0) * Dd::from_f64(k).ln() + ln_gamma_dd(gamma_k_arg);
    let exponent = nu_over_k + (2.0 * rf + 1.0);
    let mut ln_mag = exponent * ln_half_x - ln_gamma_k - ln_gamma_dd(Dd::from_f64(rf + 1.5));
    if c != 0.0 {
        ln_mag = ln_mag + ln_abs_c * rf;
    } else if r > 0 {
        return Dd::ZERO;
    }
    let negative = c > 0.0 && r % 2 == 1;
    let mag = ln_mag.exp();
    if negative {
        -mag
    } else {
        mag
    }
}

/// Literal summation of the k-Struve series at double-double precision.
///
/// `terms` is the exact number of terms taken (at most 200). The returned
/// tail bound is in working precision.
pub fn oracle_struve_sum(params: &StruveParams, x: f64, terms: usize) -> Result<OracleSum> {
    if terms == 0 || terms > 200 {
        return Err(Error::domain(format!(
            "oracle term count must lie in [1, 200], got {terms}"
        )));
    }
    if x < 0.0 {
        return Err(Error::domain(
            "x must be non-negative: the series carries a non-integer power of x".to_string(),
        ));
    }
    if x == 0.0 {
        if params.nu() <= -params.k() {
            return Err(Error::domain(
                "x = 0 requires nu > -k so the leading exponent nu/k + 1 is positive".to_string(),
            ));
        }
        return Ok(OracleSum {
            value: Dd::ZERO,
            tail_bound: 0.0,
            terms_used: 1,
        });
    }

    let (nu, k, c) = (params.nu(), params.k(), params.c());
    let ln_half_x = Dd::from_f64(x / 2.0).ln();
    let nu_over_k = Dd::from_div(nu, k);
    let ln_abs_c = if c == 0.0 {
        Dd::ZERO
    } else {
        Dd::from_f64(c.abs()).ln()
    };

    let mut sum = Dd::ZERO;
    for r in 0..terms {
        sum = sum + term_dd(params, r, ln_half_x, nu_over_k, ln_abs_c);
    }

    // Tail bound from the first omitted term and the (decreasing) term ratio.
    let r = terms as f64;
    let ratio = c.abs() * (x / 2.0) * (x / 2.0) / ((r * k + nu + 1.5 * k) * (r + 1.5));
    let tail_bound = if c == 0.0 {
        0.0
    } else if ratio < 1.0 {
        term_dd(params, terms, ln_half_x, nu_over_k, ln_abs_c)
            .abs()
            .to_f64()
            / (1.0 - ratio)
    } else {
        f64::INFINITY
    };

    Ok(OracleSum {
        value: sum,
        tail_bound,
        terms_used: terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(nu: f64, k: f64, c: f64) -> StruveParams {
        StruveParams::new(nu, k, c).unwrap()
    }

    #[test]
    fn classical_struve_h0_at_one() {
        let s = oracle_struve_sum(&params(0.0, 1.0, 1.0), 1.0, 30).unwrap();
        // Reference: classical Struve H_0(1).
        let reference = Dd::new(0.5686566270482879, 5.1679978271400425e-17);
        assert!(s.tail_bound < 1e-25);
        assert!(((s.value - reference) / reference).abs().to_f64() < 1e-25);
    }

    #[test]
    fn half_order_matches_closed_form() {
        // S(1/2, 1, 1; x) = sqrt(2/pi) x^{-1/2} (1 - cos x); at x = 1 the
        // closed form is evaluated in double-double via 1-cos = 2 sin^2(x/2).
        let s = oracle_struve_sum(&params(0.5, 1.0, 1.0), 1.0, 30).unwrap();
        let half = Dd::from_f64(0.5);
        let one_minus_cos = half.sin().sqr().mul_pwr2(2.0);
        let closed = (Dd::from_f64(2.0) / Dd::PI).sqrt() * one_minus_cos;
        assert!(
            ((s.value - closed) / closed).abs().to_f64() < 1e-20,
            "rel = {:e}",
            ((s.value - closed) / closed).abs().to_f64()
        );
    }

    #[test]
    fn zero_argument_is_exactly_zero() {
        let s = oracle_struve_sum(&params(1.0, 2.0, -1.0), 0.0, 30).unwrap();
        assert!(s.value.is_zero());
        assert_eq!(s.tail_bound, 0.0);
    }

    #[test]
    fn term_budget_is_enforced() {
        assert!(oracle_struve_sum(&params(0.0, 1.0, 1.0), 1.0, 201).is_err());
        assert!(oracle_struve_sum(&params(0.0, 1.0, 1.0), 1.0, 0).is_err());
    }
}
