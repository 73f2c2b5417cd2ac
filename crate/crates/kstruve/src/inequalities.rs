//! Grid-based certification of the monotonicity, log-convexity and
//! Turan-type inequalities of the normalized k-Struve function.
//!
//! Strict inequalities are verified as non-strict with a multiplicative
//! slack (default 1e-12): floating point cannot witness strictness, and the
//! slack documents the numerical claim actually tested. Monotonicity in a
//! continuous variable is certified on the finite sorted sample named in the
//! report, nothing more.

use crate::error::{Error, Result};
use crate::special::k_digamma;
use crate::struve::{modified_struve, normalized_struve, struve_derivative, StruveParams, TuranProbe};
use crate::witness::Point;
use serde::Serialize;

/// Default multiplicative slack for inequality certification.
pub const DEFAULT_SLACK: f64 = 1e-12;

/// Monotonicity classification of a finite sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Increasing,
    Decreasing,
    Constant,
    Mixed,
}

/// A violating grid point with the amount by which it broke the inequality.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub point: Point,
    pub margin: f64,
}

/// Outcome of one grid check. `worst_margin` is the largest margin seen
/// (margin > 0 means violation); `passed` holds exactly when `violations`
/// is empty. With zero comparisons the check passes vacuously and
/// `worst_margin` is -infinity.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub points_tested: usize,
    pub violations: Vec<Violation>,
    pub worst_margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
    pub passed: bool,
}

pub(crate) struct ReportBuilder {
    name: String,
    points: usize,
    worst: f64,
    witness: Option<Point>,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        ReportBuilder {
            name: name.into(),
            points: 0,
            worst: f64::NEG_INFINITY,
            witness: None,
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, point: Point, margin: f64) {
        self.points += 1;
        if margin > self.worst || self.witness.is_none() {
            self.worst = margin;
            self.witness = Some(point);
        }
        if margin > 0.0 {
            self.violations.push(Violation { point, margin });
        }
    }

    pub fn finish(self) -> VerificationReport {
        let passed = self.violations.is_empty();
        VerificationReport {
            check_name: self.name,
            points_tested: self.points,
            violations: self.violations,
            worst_margin: self.worst,
            witness: self.witness,
            direction: None,
            passed,
        }
    }
}

/// Rectangular parameter grid for the verification sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    pub nu_values: Vec<f64>,
    pub k_values: Vec<f64>,
    pub x_values: Vec<f64>,
    /// Turan shifts.
    pub a_values: Vec<f64>,
    /// Interpolation weights for the log-convexity check, each in [0, 1].
    pub alpha_convexity: Vec<f64>,
}

impl GridSpec {
    pub fn new(
        nu_values: Vec<f64>,
        k_values: Vec<f64>,
        x_values: Vec<f64>,
        a_values: Vec<f64>,
        alpha_convexity: Vec<f64>,
    ) -> Result<Self> {
        for &k in &k_values {
            if !(k > 0.0) {
                return Err(Error::domain(format!("grid k must be positive, got {k}")));
            }
            for &nu in &nu_values {
                if !(nu > -1.5 * k) {
                    return Err(Error::domain(format!(
                        "grid pair (nu = {nu}, k = {k}) violates nu > -3k/2"
                    )));
                }
                for &a in &a_values {
                    if !(nu > a.abs() - 1.5 * k) {
                        return Err(Error::domain(format!(
                            "grid triple (nu = {nu}, a = {a}, k = {k}) violates nu > |a| - 3k/2"
                        )));
                    }
                }
            }
        }
        for &al in &alpha_convexity {
            if !(0.0..=1.0).contains(&al) {
                return Err(Error::domain(format!(
                    "convexity weights must lie in [0, 1], got {al}"
                )));
            }
        }
        Ok(GridSpec {
            nu_values,
            k_values,
            x_values,
            a_values,
            alpha_convexity,
        })
    }
}

/// Indexed coefficient pair (a_r, b_r) with strictly positive b_r, as used
/// by the ratio-of-power-series monotonicity lemma.
#[derive(Debug, Clone, Serialize)]
pub struct RatioSequence {
    numerator: Vec<f64>,
    denominator: Vec<f64>,
}

impl RatioSequence {
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>) -> Result<Self> {
        if numerator.len() != denominator.len() {
            return Err(Error::domain(format!(
                "sequence lengths differ: {} vs {}",
                numerator.len(),
                denominator.len()
            )));
        }
        if let Some(bad) = denominator.iter().find(|b| !(**b > 0.0)) {
            return Err(Error::domain(format!(
                "denominator coefficients must be strictly positive, got {bad}"
            )));
        }
        Ok(RatioSequence {
            numerator,
            denominator,
        })
    }

    pub fn len(&self) -> usize {
        self.numerator.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerator.is_empty()
    }
}

/// Classify the monotonicity of the ratio sequence a_r / b_r with a relative
/// tie tolerance of 1e-14.
pub fn coefficient_ratio_direction(seq: &RatioSequence) -> Result<Direction> {
    if seq.len() < 2 {
        return Err(Error::domain(
            "at least two coefficients are needed to classify a ratio sequence".to_string(),
        ));
    }
    let ratios: Vec<f64> = seq
        .numerator
        .iter()
        .zip(&seq.denominator)
        .map(|(a, b)| a / b)
        .collect();
    classify(&ratios, 1e-14)
}

fn classify(values: &[f64], tie_rel: f64) -> Result<Direction> {
    let mut up = false;
    let mut down = false;
    for w in values.windows(2) {
        let tol = tie_rel * w[0].abs().max(w[1].abs());
        if w[1] - w[0] > tol {
            up = true;
        } else if w[0] - w[1] > tol {
            down = true;
        }
    }
    Ok(match (up, down) {
        (false, false) => Direction::Constant,
        (true, false) => Direction::Increasing,
        (false, true) => Direction::Decreasing,
        (true, true) => Direction::Mixed,
    })
}

fn require_sorted_positive(x_values: &[f64]) -> Result<()> {
    for w in x_values.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::domain(
                "x_values must be strictly ascending".to_string(),
            ));
        }
    }
    if x_values.first().copied().unwrap_or(1.0) <= 0.0 {
        return Err(Error::domain("x_values must be strictly positive".to_string()));
    }
    Ok(())
}

/// Normalized value; positive for x > 0 since every coefficient is positive.
fn norm(nu: f64, k: f64, x: f64) -> Result<f64> {
    Ok(normalized_struve(nu, k, x)?.value)
}

/// Checks that x -> curly-L_mu / curly-L_nu is monotone across the sorted
/// positive sample: nondecreasing when nu >= mu, nonincreasing when the
/// arguments are given swapped. The observed direction is reported.
pub fn ratio_monotonicity_check(
    mu: f64,
    nu: f64,
    k: f64,
    x_values: &[f64],
) -> Result<VerificationReport> {
    ratio_monotonicity_check_with_slack(mu, nu, k, x_values, DEFAULT_SLACK)
}

pub fn ratio_monotonicity_check_with_slack(
    mu: f64,
    nu: f64,
    k: f64,
    x_values: &[f64],
    slack: f64,
) -> Result<VerificationReport> {
    require_sorted_positive(x_values)?;
    let expect_nondecreasing = nu >= mu;
    let mut builder = ReportBuilder::new("ratio_monotonicity");
    let mut ratios = Vec::with_capacity(x_values.len());
    for &x in x_values {
        let denom = norm(nu, k, x)?;
        if denom == 0.0 {
            return Err(Error::domain(format!(
                "normalized k-Struve value vanished at x = {x}; cannot form the ratio"
            )));
        }
        ratios.push(norm(mu, k, x)? / denom);
    }
    for (i, w) in ratios.windows(2).enumerate() {
        let allowed = slack * w[0].abs();
        let margin = if expect_nondecreasing {
            (w[0] - w[1]) - allowed
        } else {
            (w[1] - w[0]) - allowed
        };
        let point = Point {
            mu: Some(mu),
            nu: Some(nu),
            k: Some(k),
            x: Some(x_values[i + 1]),
            ..Point::default()
        };
        builder.record(point, margin);
    }
    let mut report = builder.finish();
    report.direction = Some(classify(&ratios, 1e-14)?);
    Ok(report)
}

/// For every fixed (k, x): curly-L is nonincreasing in nu when x >= 0 and
/// nondecreasing when x < 0 (the function is odd in x).
pub fn parameter_monotonicity_check(grid: &GridSpec) -> Result<VerificationReport> {
    parameter_monotonicity_check_with_slack(grid, DEFAULT_SLACK)
}

pub fn parameter_monotonicity_check_with_slack(
    grid: &GridSpec,
    slack: f64,
) -> Result<VerificationReport> {
    let mut builder = ReportBuilder::new("parameter_monotonicity");
    for &k in &grid.k_values {
        let mut nus = grid.nu_values.clone();
        nus.sort_by(f64::total_cmp);
        for &x in &grid.x_values {
            for pair in nus.windows(2) {
                let (lo, hi) = (pair[0], pair[1]);
                let v_lo = norm(lo, k, x)?;
                let v_hi = norm(hi, k, x)?;
                let allowed = slack * v_lo.abs().max(v_hi.abs());
                // decreasing chain for x >= 0, increasing for x < 0
                let margin = if x >= 0.0 {
                    (v_hi - v_lo) - allowed
                } else {
                    (v_lo - v_hi) - allowed
                };
                let point = Point {
                    nu: Some(hi),
                    mu: Some(lo),
                    k: Some(k),
                    x: Some(x),
                    ..Point::default()
                };
                builder.record(point, margin);
            }
        }
    }
    Ok(builder.finish())
}

/// Log-convexity of nu -> curly-L_nu(x) for fixed x > 0:
/// curly-L at the interpolated order is at most the geometric mean of the
/// endpoint values (up to the slack).
pub fn log_convexity_check(grid: &GridSpec) -> Result<VerificationReport> {
    log_convexity_check_with_slack(grid, DEFAULT_SLACK)
}

pub fn log_convexity_check_with_slack(
    grid: &GridSpec,
    slack: f64,
) -> Result<VerificationReport> {
    let mut builder = ReportBuilder::new("log_convexity");
    for &k in &grid.k_values {
        for &x in &grid.x_values {
            if !(x > 0.0) {
                continue;
            }
            for (i, &nu1) in grid.nu_values.iter().enumerate() {
                for &nu2 in grid.nu_values.iter().skip(i + 1) {
                    let ln1 = norm(nu1, k, x)?.ln();
                    let ln2 = norm(nu2, k, x)?.ln();
                    for &al in &grid.alpha_convexity {
                        let mid = al * nu1 + (1.0 - al) * nu2;
                        let ln_mid = norm(mid, k, x)?.ln();
                        let margin = ln_mid - (al * ln1 + (1.0 - al) * ln2) - slack.ln_1p();
                        let point = Point {
                            nu: Some(nu1),
                            mu: Some(nu2),
                            k: Some(k),
                            x: Some(x),
                            alpha: Some(al),
                            ..Point::default()
                        };
                        builder.record(point, margin);
                    }
                }
            }
        }
    }
    Ok(builder.finish())
}

/// Reversed Turan inequality: Delta = curly-L_nu^2 - curly-L_{nu-a}
/// curly-L_{nu+a} <= 0, certified as Delta <= slack * curly-L_nu^2.
pub fn turan_check(probe: &TuranProbe, x_values: &[f64]) -> Result<VerificationReport> {
    turan_check_with_slack(probe, x_values, DEFAULT_SLACK)
}

pub fn turan_check_with_slack(
    probe: &TuranProbe,
    x_values: &[f64],
    slack: f64,
) -> Result<VerificationReport> {
    let mut builder = ReportBuilder::new("turan");
    for &x in x_values {
        if !(x > 0.0) {
            return Err(Error::domain(format!(
                "turan_check requires x > 0, got {x}"
            )));
        }
        let center = norm(probe.nu, probe.k, x)?;
        let lower = norm(probe.nu - probe.a, probe.k, x)?;
        let upper = norm(probe.nu + probe.a, probe.k, x)?;
        let delta = center * center - lower * upper;
        let margin = delta - slack * center * center;
        let point = Point {
            nu: Some(probe.nu),
            a: Some(probe.a),
            k: Some(probe.k),
            x: Some(x),
            ..Point::default()
        };
        builder.record(point, margin);
    }
    Ok(builder.finish())
}

/// Turanian determinant Delta itself, exposed for direct inspection.
pub fn turan_delta(probe: &TuranProbe, x: f64) -> Result<f64> {
    let center = norm(probe.nu, probe.k, x)?;
    let lower = norm(probe.nu - probe.a, probe.k, x)?;
    let upper = norm(probe.nu + probe.a, probe.k, x)?;
    Ok(center * center - lower * upper)
}

/// nu -> L_{nu+k}(x) / L_nu(x) (modified variant) is nonincreasing along the
/// ascending order chain.
pub fn nu_ratio_decreasing_check(
    k: f64,
    nu_values: &[f64],
    x: f64,
) -> Result<VerificationReport> {
    nu_ratio_decreasing_check_with_slack(k, nu_values, x, DEFAULT_SLACK)
}

pub fn nu_ratio_decreasing_check_with_slack(
    k: f64,
    nu_values: &[f64],
    x: f64,
    slack: f64,
) -> Result<VerificationReport> {
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "nu_ratio_decreasing_check requires x > 0, got {x}"
        )));
    }
    let mut nus = nu_values.to_vec();
    nus.sort_by(f64::total_cmp);
    let mut builder = ReportBuilder::new("nu_ratio_decreasing");
    let ratio = |nu: f64| -> Result<f64> {
        let low = modified_struve(nu, k, x)?.value;
        let high = modified_struve(nu + k, k, x)?.value;
        Ok(high / low)
    };
    let mut prev: Option<(f64, f64)> = None;
    for &nu in &nus {
        let g = ratio(nu)?;
        if let Some((pnu, pg)) = prev {
            let margin = (g - pg) - slack * pg.abs();
            let point = Point {
                nu: Some(nu),
                mu: Some(pnu),
                k: Some(k),
                x: Some(x),
                ..Point::default()
            };
            builder.record(point, margin);
        }
        prev = Some((nu, g));
    }
    Ok(builder.finish())
}

/// Derivative form of the ratio monotonicity: with z_nu(x) = x^(-nu/k)
/// L_nu(x), requires z_mu' z_nu - z_mu z_nu' >= -tol * scale at each sample,
/// using exact series derivatives.
pub fn ratio_derivative_check(
    mu: f64,
    nu: f64,
    k: f64,
    x_values: &[f64],
    tol: f64,
) -> Result<VerificationReport> {
    require_sorted_positive(x_values)?;
    let mut builder = ReportBuilder::new("ratio_derivative_nonnegative");
    let z_and_dz = |order: f64, x: f64| -> Result<(f64, f64)> {
        let params = StruveParams::new(order, k, -1.0)?;
        let value = modified_struve(order, k, x)?.value;
        let deriv = struve_derivative(&params, x)?.value;
        let xm = x.powf(-order / k);
        Ok((xm * value, xm * (deriv - order / k * value / x)))
    };
    for &x in x_values {
        let (z_mu, dz_mu) = z_and_dz(mu, x)?;
        let (z_nu, dz_nu) = z_and_dz(nu, x)?;
        let q = dz_mu * z_nu - z_mu * dz_nu;
        let scale = (dz_mu * z_nu).abs() + (z_mu * dz_nu).abs();
        let margin = -q - tol * scale.max(1e-300);
        let point = Point {
            mu: Some(mu),
            nu: Some(nu),
            k: Some(k),
            x: Some(x),
            ..Point::default()
        };
        builder.record(point, margin);
    }
    Ok(builder.finish())
}

/// The k-digamma difference that drives the parameter monotonicity proof:
/// Psi_k(nu + 3k/2) - Psi_k(rk + nu + 3k/2) <= 0 for every r >= 0.
pub fn digamma_difference_check(
    nu: f64,
    k: f64,
    r_max: usize,
    slack: f64,
) -> Result<VerificationReport> {
    let mut builder = ReportBuilder::new("digamma_difference");
    let base = k_digamma(nu + 1.5 * k, k)?;
    for r in 0..=r_max {
        let shifted = k_digamma((r as f64) * k + nu + 1.5 * k, k)?;
        let margin = (base - shifted) - slack;
        let point = Point {
            nu: Some(nu),
            k: Some(k),
            r: Some(r),
            ..Point::default()
        };
        builder.record(point, margin);
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::struve::struve_coefficient_normalized;

    #[test]
    fn direction_classification() {
        let seq = RatioSequence::new(vec![1.0, 2.0, 3.0], vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(coefficient_ratio_direction(&seq).unwrap(), Direction::Increasing);
        let seq = RatioSequence::new(vec![2.0, 2.0, 2.0], vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(coefficient_ratio_direction(&seq).unwrap(), Direction::Constant);
        let seq = RatioSequence::new(vec![1.0, 3.0, 2.0], vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(coefficient_ratio_direction(&seq).unwrap(), Direction::Mixed);
        assert!(RatioSequence::new(vec![1.0], vec![0.0]).is_err());
        let short = RatioSequence::new(vec![1.0], vec![1.0]).unwrap();
        assert!(coefficient_ratio_direction(&short).is_err());
    }

    #[test]
    fn coefficient_ratio_of_orders_decreases() {
        // a_r = f_r(nu = 2), b_r = f_r(nu = 1): the ratio sequence falls.
        let a: Vec<f64> = (0..=20)
            .map(|r| struve_coefficient_normalized(r, 2.0, 1.0).unwrap())
            .collect();
        let b: Vec<f64> = (0..=20)
            .map(|r| struve_coefficient_normalized(r, 1.0, 1.0).unwrap())
            .collect();
        let seq = RatioSequence::new(a, b).unwrap();
        assert_eq!(coefficient_ratio_direction(&seq).unwrap(), Direction::Decreasing);
    }

    #[test]
    fn ratio_monotonicity_cases() {
        let xs: Vec<f64> = vec![0.5, 1.0, 2.0, 3.0, 5.0, 8.0];
        // identical orders: constant ratio, passes.
        let r = ratio_monotonicity_check(1.0, 1.0, 1.0, &xs).unwrap();
        assert!(r.passed);
        assert_eq!(r.direction, Some(Direction::Constant));
        // mu < nu: increasing.
        let r = ratio_monotonicity_check(0.0, 1.0, 1.0, &xs).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
        assert_eq!(r.direction, Some(Direction::Increasing));
        // swapped arguments: reciprocal, decreasing, still certified.
        let r = ratio_monotonicity_check(1.0, 0.0, 1.0, &xs).unwrap();
        assert!(r.passed);
        assert_eq!(r.direction, Some(Direction::Decreasing));
        // unsorted input rejected
        assert!(ratio_monotonicity_check(0.0, 1.0, 1.0, &[2.0, 1.0]).is_err());
    }

    fn demo_grid() -> GridSpec {
        GridSpec::new(
            vec![-0.9, 0.0, 1.0, 2.0],
            vec![1.0],
            vec![-2.0, 0.0, 2.0],
            vec![0.0, 0.1],
            vec![0.25, 0.5, 0.75],
        )
        .unwrap()
    }

    #[test]
    fn grid_invariants_enforced() {
        assert!(GridSpec::new(vec![-2.0], vec![1.0], vec![], vec![], vec![]).is_err());
        assert!(GridSpec::new(vec![0.0], vec![1.0], vec![], vec![2.0], vec![]).is_err());
        assert!(GridSpec::new(vec![0.0], vec![1.0], vec![], vec![], vec![1.5]).is_err());
    }

    #[test]
    fn parameter_monotonicity_with_sign_mirror() {
        let r = parameter_monotonicity_check(&demo_grid()).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
        // strictly decreasing chain at x = 2 for k = 1
        let v = |nu: f64| normalized_struve(nu, 1.0, 2.0).unwrap().value;
        assert!(v(-1.0) > v(0.0) && v(0.0) > v(1.0) && v(1.0) > v(2.0));
        // mirrored at x = -2 by oddness
        let w = |nu: f64| normalized_struve(nu, 1.0, -2.0).unwrap().value;
        assert!(w(-1.0) < w(0.0) && w(0.0) < w(1.0) && w(1.0) < w(2.0));
        assert!(GridSpec::new(vec![-1.0], vec![1.0], vec![], vec![0.5], vec![]).is_err());
    }

    #[test]
    fn log_convexity_midpoint() {
        let r = log_convexity_check(&demo_grid()).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
        // direct midpoint instance
        let l = |nu: f64| normalized_struve(nu, 1.0, 1.0).unwrap().value;
        assert!(l(1.0) <= (l(0.0) * l(2.0)).sqrt() * (1.0 + 1e-12));
        // endpoint weights give equality
        for &al in &[0.0, 1.0] {
            let mid = al * 0.0 + (1.0 - al) * 2.0;
            let lhs = l(mid);
            let rhs = l(0.0).powf(al) * l(2.0).powf(1.0 - al);
            assert!((lhs - rhs).abs() <= 1e-15 * rhs);
        }
        // equal orders give equality within 1e-15
        let a = l(1.5);
        assert!((a - (a * a).sqrt()).abs() <= 1e-15 * a);
    }

    #[test]
    fn turan_cases() {
        // a = 0 gives an exactly zero determinant.
        let probe = TuranProbe::new(1.0, 0.0, 1.0).unwrap();
        assert_eq!(turan_delta(&probe, 1.3).unwrap(), 0.0);
        // strictly negative for a real shift
        let probe = TuranProbe::new(1.0, 0.5, 1.0).unwrap();
        assert!(turan_delta(&probe, 1.0).unwrap() < 0.0);
        let probe = TuranProbe::new(0.0, 1.0, 2.0).unwrap();
        assert!(turan_delta(&probe, 3.0).unwrap() < 0.0);
        let r = turan_check(&probe, &[0.1, 1.0, 5.0, 10.0]).unwrap();
        assert!(r.passed);
        assert!(turan_check(&probe, &[0.0]).is_err());
    }

    #[test]
    fn nu_ratio_chain() {
        let r = nu_ratio_decreasing_check(1.0, &[-1.0, -0.5, 0.0, 1.0, 2.0], 1.0).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
        let r = nu_ratio_decreasing_check(0.5, &[-0.5, 0.0, 0.5], 4.0).unwrap();
        assert!(r.passed);
        // single order: vacuous pass
        let r = nu_ratio_decreasing_check(1.0, &[0.5], 1.0).unwrap();
        assert!(r.passed);
        assert_eq!(r.points_tested, 0);
    }

    #[test]
    fn ratio_derivative_nonnegative() {
        let xs = vec![0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
        for &(mu, nu, k) in &[(0.0, 1.0, 1.0), (-0.2, 0.5, 0.5), (1.0, 4.0, 2.0)] {
            let r = ratio_derivative_check(mu, nu, k, &xs, 1e-10).unwrap();
            assert!(r.passed, "mu={mu} nu={nu} k={k}: {:?}", r.violations);
        }
    }

    #[test]
    fn digamma_difference_nonpositive() {
        for &(nu, k) in &[(-0.2, 0.5), (0.0, 1.0), (2.0, 2.0)] {
            let r = digamma_difference_check(nu, k, 10, 1e-15).unwrap();
            assert!(r.passed);
        }
    }
}
