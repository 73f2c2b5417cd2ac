//! Named verification suites over compiled-in default grids.
//!
//! Each suite runs a fixed list of checks and reports, per check, the number
//! of points tested, the worst margin (margin > 0 means violation) and the
//! witness point attaining it. The `all` suite runs every suite in the
//! documented order: gamma, struve, recurrence, ode, integral, closedform,
//! turan, monotonicity, logconvexity.

use crate::error::{Error, Result};
use crate::identities::{
    closed_form_half_order, integral_rep, kbeta_decomposition_check, legendre_duplication_residual,
    ode_residual, rec1_residual, rec2_residual, rec3_residual, rec4_residual, ConstantSet, Sign,
};
use crate::inequalities::{
    digamma_difference_check, log_convexity_check_with_slack, nu_ratio_decreasing_check_with_slack,
    parameter_monotonicity_check_with_slack, ratio_derivative_check,
    ratio_monotonicity_check_with_slack, turan_check_with_slack, GridSpec, VerificationReport,
};
use crate::numerics::{
    central_difference, integrate_unit_interval_with_distance, oracle_struve_sum, NeumaierSum,
    QuadratureConfig,
};
use crate::special::{gamma, k_beta, k_digamma, k_gamma, k_trigamma, EULER_GAMMA};
use crate::struve::{
    modified_struve, normalized_struve, struve, struve_coefficient, struve_jet, StruveParams,
    TuranProbe,
};
use crate::witness::Point;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Selectable verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Gamma,
    Struve,
    Recurrence,
    Ode,
    Integral,
    ClosedForm,
    Turan,
    Monotonicity,
    LogConvexity,
    All,
}

/// Fixed execution order of `--suite all`.
pub const SUITE_ORDER: [Suite; 9] = [
    Suite::Gamma,
    Suite::Struve,
    Suite::Recurrence,
    Suite::Ode,
    Suite::Integral,
    Suite::ClosedForm,
    Suite::Turan,
    Suite::Monotonicity,
    Suite::LogConvexity,
];

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Gamma => "gamma",
            Suite::Struve => "struve",
            Suite::Recurrence => "recurrence",
            Suite::Ode => "ode",
            Suite::Integral => "integral",
            Suite::ClosedForm => "closedform",
            Suite::Turan => "turan",
            Suite::Monotonicity => "monotonicity",
            Suite::LogConvexity => "logconvexity",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gamma" => Suite::Gamma,
            "struve" => Suite::Struve,
            "recurrence" => Suite::Recurrence,
            "ode" => Suite::Ode,
            "integral" => Suite::Integral,
            "closedform" => Suite::ClosedForm,
            "turan" => Suite::Turan,
            "monotonicity" => Suite::Monotonicity,
            "logconvexity" => Suite::LogConvexity,
            "all" => Suite::All,
            other => {
                return Err(Error::domain(format!(
                    "unknown suite '{other}'; expected one of gamma, struve, recurrence, ode, \
                     integral, closedform, turan, monotonicity, logconvexity, all"
                )))
            }
        })
    }
}

/// Suite options. `tol_override` replaces every check tolerance in the
/// suite; `constants` selects derived or as-published prefactors for the
/// integral/closed-form suites.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub tol_override: Option<f64>,
    pub constants: ConstantSet,
}

/// One check of a suite: worst margin over its grid and the witness point.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub points: usize,
    /// Margin > 0 means the check failed at the witness; vacuous checks
    /// report -infinity (serialized as null).
    pub worst_margin: f64,
    pub witness: Option<Point>,
    pub passed: bool,
}

/// Machine-readable outcome of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

struct Agg {
    name: &'static str,
    points: usize,
    worst: f64,
    witness: Option<Point>,
    failed: bool,
}

impl Agg {
    fn new(name: &'static str) -> Self {
        Agg {
            name,
            points: 0,
            worst: f64::NEG_INFINITY,
            witness: None,
            failed: false,
        }
    }

    fn record(&mut self, point: Point, margin: f64) {
        self.points += 1;
        if margin > self.worst || self.witness.is_none() {
            self.worst = margin;
            self.witness = Some(point);
        }
        if margin > 0.0 {
            self.failed = true;
        }
    }

    fn absorb(&mut self, rep: VerificationReport) {
        self.points += rep.points_tested;
        if rep.worst_margin > self.worst || self.witness.is_none() {
            self.worst = rep.worst_margin;
            self.witness = rep.witness;
        }
        if !rep.passed {
            self.failed = true;
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            points: self.points,
            worst_margin: self.worst,
            witness: self.witness,
            passed: !self.failed,
        }
    }
}

// ---------------------------------------------------------------------------
// Compiled-in default grids
// ---------------------------------------------------------------------------

const IDENTITY_KS: [f64; 3] = [0.5, 1.0, 2.0];
const IDENTITY_NU_FACTORS: [f64; 5] = [-0.4, 0.0, 0.5, 1.0, 2.0];
const IDENTITY_CS: [f64; 2] = [-1.0, 1.0];
const IDENTITY_XS: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
const INTEGRAL_ALPHAS: [f64; 3] = [0.5, 1.0, 2.0];
const CLOSED_KS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
const CLOSED_XS: [f64; 4] = [0.1, 1.0, 2.0, 5.0];
const TURAN_NU_FACTORS: [f64; 6] = [-0.4, 0.0, 0.5, 1.0, 2.0, 4.0];
const TURAN_A_FACTORS: [f64; 4] = [0.0, 0.25, 0.5, 1.0];
const TURAN_XS: [f64; 4] = [0.1, 1.0, 5.0, 10.0];
const MONO_XS: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
const PARAM_MONO_XS: [f64; 9] = [-10.0, -5.0, -1.0, -0.1, 0.0, 0.1, 1.0, 5.0, 10.0];
const CONVEXITY_WEIGHTS: [f64; 3] = [0.25, 0.5, 0.75];

fn inequality_grid(k: f64) -> GridSpec {
    GridSpec::new(
        TURAN_NU_FACTORS.iter().map(|f| f * k).collect(),
        vec![k],
        PARAM_MONO_XS.to_vec(),
        TURAN_A_FACTORS.iter().map(|f| f * k).collect(),
        CONVEXITY_WEIGHTS.to_vec(),
    )
    .expect("compiled-in grid is valid")
}

/// Serializable description of every compiled-in default grid.
#[derive(Debug, Clone, Serialize)]
pub struct DefaultGrids {
    pub identity_k: Vec<f64>,
    pub identity_nu_over_k: Vec<f64>,
    pub identity_c: Vec<f64>,
    pub identity_x: Vec<f64>,
    pub integral_alpha: Vec<f64>,
    pub closedform_k: Vec<f64>,
    pub closedform_alpha: Vec<f64>,
    pub closedform_x: Vec<f64>,
    pub turan_nu_over_k: Vec<f64>,
    pub turan_a_over_k: Vec<f64>,
    pub turan_x: Vec<f64>,
    pub monotonicity_x: Vec<f64>,
    pub parameter_monotonicity_x: Vec<f64>,
    pub convexity_weights: Vec<f64>,
    pub gamma_k: Vec<f64>,
    pub gamma_x_range: [f64; 2],
    pub gamma_x_points: usize,
}

pub fn default_grids() -> DefaultGrids {
    DefaultGrids {
        identity_k: IDENTITY_KS.to_vec(),
        identity_nu_over_k: IDENTITY_NU_FACTORS.to_vec(),
        identity_c: IDENTITY_CS.to_vec(),
        identity_x: IDENTITY_XS.to_vec(),
        integral_alpha: INTEGRAL_ALPHAS.to_vec(),
        closedform_k: CLOSED_KS.to_vec(),
        closedform_alpha: INTEGRAL_ALPHAS.to_vec(),
        closedform_x: CLOSED_XS.to_vec(),
        turan_nu_over_k: TURAN_NU_FACTORS.to_vec(),
        turan_a_over_k: TURAN_A_FACTORS.to_vec(),
        turan_x: TURAN_XS.to_vec(),
        monotonicity_x: MONO_XS.to_vec(),
        parameter_monotonicity_x: PARAM_MONO_XS.to_vec(),
        convexity_weights: CONVEXITY_WEIGHTS.to_vec(),
        gamma_k: vec![0.5, 1.0, 2.0, 3.0],
        gamma_x_range: [0.1, 50.0],
        gamma_x_points: 100,
    }
}

/// Deterministic pseudo-random domain points (splitmix64 driven), used by
/// the oracle-agreement check and reproducible across runs.
pub fn sample_domain_points(n: usize, seed: u64) -> Vec<(StruveParams, f64)> {
    let mut state = seed;
    let mut next = move || -> f64 {
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^= z >> 31;
        (z >> 11) as f64 / 9007199254740992.0
    };
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let k = 0.4 + 2.1 * next();
        let nu = -1.45 * k + 5.45 * k * next();
        let c = -2.0 + 4.0 * next();
        let x = (6.0 * next()).max(1e-12);
        if let Ok(p) = StruveParams::new(nu, k, c) {
            out.push((p, x));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

fn log_spaced(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let ratio = hi / lo;
    (0..n).map(move |i| lo * ratio.powf(i as f64 / (n - 1) as f64))
}

fn gamma_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let mut checks = Vec::new();

    let mut functional = Agg::new("gamma_functional_equation");
    let mut scaling = Agg::new("gamma_scaling_identity");
    for &k in &[0.5, 1.0, 2.0, 3.0] {
        for x in log_spaced(0.1, 50.0, 100) {
            let lhs = k_gamma(x + k, k)?;
            let rhs = x * k_gamma(x, k)?;
            let point = Point {
                k: Some(k),
                x: Some(x),
                ..Point::default()
            };
            functional.record(point, (lhs - rhs).abs() / rhs.abs() - tol(1e-12));

            let lhs = k_gamma(k * x, k)?;
            let rhs = k.powf(x - 1.0) * gamma(x);
            scaling.record(point, (lhs - rhs).abs() / rhs.abs() - tol(1e-12));
        }
    }
    checks.push(functional.finish());
    checks.push(scaling.finish());

    let mut dig = Agg::new("digamma_series_consistency");
    let n_terms = 1_000_000u64;
    for &k in &[0.5, 2.0] {
        for &tf in &[0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0] {
            let t = tf * k;
            let mut acc = NeumaierSum::new();
            for n in 1..=n_terms {
                let nk = n as f64 * k;
                acc.add(t / (nk * (nk + t)));
            }
            let tail = (1.0 + t / (n_terms as f64 * k)).ln() / k;
            let series = (k.ln() - EULER_GAMMA) / k - 1.0 / t + acc.total() + tail;
            let point = Point {
                k: Some(k),
                x: Some(t),
                ..Point::default()
            };
            dig.record(point, (series - k_digamma(t, k)?).abs() - tol(1e-8));
        }
    }
    checks.push(dig.finish());

    let mut tri = Agg::new("trigamma_derivative_consistency");
    for &(t, k) in &[(0.7, 1.0), (1.5, 0.5), (2.5, 2.0), (6.0, 1.0), (4.0, 3.0)] {
        let fd = central_difference(|u| k_digamma(u, k).unwrap(), t, 1);
        let v = k_trigamma(t, k)?;
        let point = Point {
            k: Some(k),
            x: Some(t),
            ..Point::default()
        };
        tri.record(point, (fd - v).abs() / v.abs() - tol(1e-6));
    }
    checks.push(tri.finish());

    let mut anchor = Agg::new("trigamma_reference_value");
    let pi2_6 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
    anchor.record(
        Point {
            k: Some(1.0),
            x: Some(1.0),
            ..Point::default()
        },
        (k_trigamma(1.0, 1.0)? - pi2_6).abs() / pi2_6 - tol(1e-10),
    );
    checks.push(anchor.finish());

    let mut dup = Agg::new("legendre_duplication");
    for i in 0..80 {
        let z = 0.1 + (40.0 - 0.1) * (i as f64) / 79.0;
        let r = legendre_duplication_residual(z)?;
        dup.record(r.point, r.relative_residual - tol(1e-12));
    }
    checks.push(dup.finish());

    let mut beta = Agg::new("beta_integral_consistency");
    let quad = QuadratureConfig::default();
    for &k in &[0.5, 2.0] {
        for &xf in &[0.6, 1.1, 2.5, 5.0] {
            for &yf in &[0.6, 1.7, 5.0] {
                let (x, y) = (xf * k, yf * k);
                let direct = k_beta(x, y, k)?;
                let ia = xf - 1.0;
                let ib = yf - 1.0;
                let q = integrate_unit_interval_with_distance(
                    |t, omt| t.powf(ia) * omt.powf(ib),
                    &quad,
                )?;
                let integral = q.value / k;
                let point = Point {
                    k: Some(k),
                    x: Some(x),
                    nu: Some(y),
                    ..Point::default()
                };
                beta.record(point, (direct - integral).abs() / direct.abs() - tol(1e-9));
            }
        }
    }
    checks.push(beta.finish());

    Ok(checks)
}

fn struve_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let mut checks = Vec::new();

    // Classical anchor H_0(1), reference minted by the double-double oracle
    // and cross-checked against the k = 1 integral representation.
    let mut anchor = Agg::new("classical_struve_anchor");
    let h01 = struve(&StruveParams::new(0.0, 1.0, 1.0)?, 1.0)?.value;
    anchor.record(
        Point {
            nu: Some(0.0),
            k: Some(1.0),
            c: Some(1.0),
            x: Some(1.0),
            ..Point::default()
        },
        (h01 - 0.5686566270482879).abs() - tol(1e-6),
    );
    checks.push(anchor.finish());

    let mut cross = Agg::new("classical_anchor_integral_crosscheck");
    let rep = integral_rep(
        &StruveParams::new(0.0, 1.0, 1.0)?,
        1.0,
        1.0,
        &QuadratureConfig::default(),
        ConstantSet::Derived,
    )?;
    cross.record(rep.point, rep.relative_residual - tol(1e-9));
    checks.push(cross.finish());

    let mut closed = Agg::new("half_order_closed_form");
    for &x in &[0.5, 1.0, 2.0] {
        let v = struve(&StruveParams::new(0.5, 1.0, 1.0)?, x)?.value;
        let want = (2.0 / std::f64::consts::PI).sqrt() / x.sqrt() * (1.0 - x.cos());
        let point = Point {
            nu: Some(0.5),
            k: Some(1.0),
            c: Some(1.0),
            x: Some(x),
            ..Point::default()
        };
        closed.record(point, (v - want).abs() / want.abs() - tol(1e-12));
    }
    checks.push(closed.finish());

    let mut classical = Agg::new("classical_reduction_oracle");
    for &nu in &[0.0, 0.5, 1.0, 2.5] {
        for &x in &[0.5, 2.0, 5.0, 10.0, 20.0] {
            let params = StruveParams::new(nu, 1.0, 1.0)?;
            let got = struve(&params, x)?.value;
            let want = oracle_struve_sum(&params, x, 160)?.value_f64();
            let point = Point {
                nu: Some(nu),
                k: Some(1.0),
                c: Some(1.0),
                x: Some(x),
                ..Point::default()
            };
            classical.record(point, (got - want).abs() / want.abs() - tol(1e-12));
        }
    }
    checks.push(classical.finish());

    let mut agreement = Agg::new("oracle_agreement");
    for (params, x) in sample_domain_points(500, 0x5EED_CAFE) {
        let got = struve(&params, x)?;
        let want = oracle_struve_sum(&params, x, 160)?;
        let diff = (got.value - want.value_f64()).abs();
        let allowed = got.abs_error_estimate + want.tail_bound + 1e-13 * got.value.abs();
        let point = Point {
            nu: Some(params.nu()),
            k: Some(params.k()),
            c: Some(params.c()),
            x: Some(x),
            ..Point::default()
        };
        agreement.record(point, diff - allowed.max(tol(0.0)));
    }
    checks.push(agreement.finish());

    let mut scalecheck = Agg::new("normalized_scaling_consistency");
    for &(nu, k) in &[(0.0, 1.0), (1.0, 0.5), (-0.4, 2.0), (2.5, 1.5)] {
        for &x in &[0.1, 0.7, 2.0, 5.0, 10.0] {
            let lhs = normalized_struve(nu, k, x)?.value;
            let rhs = (2.0 / x).powf(nu / k)
                * k_gamma(nu + 1.5 * k, k)?
                * modified_struve(nu, k, x)?.value;
            let point = Point {
                nu: Some(nu),
                k: Some(k),
                x: Some(x),
                ..Point::default()
            };
            scalecheck.record(point, (lhs - rhs).abs() / lhs.abs() - tol(1e-13));
        }
    }
    checks.push(scalecheck.finish());

    let mut odd = Agg::new("oddness_bit_exact");
    for &(nu, k, x) in &[(0.0, 1.0, 1.7), (2.0, 0.5, 8.0), (-0.4, 2.0, 0.3), (1.0, 1.0, 5.0)] {
        let plus = normalized_struve(nu, k, x)?.value;
        let minus = normalized_struve(nu, k, -x)?.value;
        let point = Point {
            nu: Some(nu),
            k: Some(k),
            x: Some(x),
            ..Point::default()
        };
        odd.record(point, if minus.to_bits() == (-plus).to_bits() { -1.0 } else { 1.0 });
    }
    checks.push(odd.finish());

    let mut recur = Agg::new("coefficient_recurrence");
    for &(nu, k, c) in &[(0.0, 1.0, 1.0), (1.3, 0.5, -2.0), (-0.7, 2.0, 4.0)] {
        for r in 0..=50usize {
            let a = struve_coefficient(r, nu, k, c)?;
            let b = struve_coefficient(r + 1, nu, k, c)?;
            if a == 0.0 || b == 0.0 {
                continue;
            }
            let want = -c / (((r as f64) * k + nu + 1.5 * k) * (r as f64 + 1.5));
            let point = Point {
                nu: Some(nu),
                k: Some(k),
                c: Some(c),
                r: Some(r),
                ..Point::default()
            };
            recur.record(point, (b / a - want).abs() / want.abs() - tol(1e-14));
        }
    }
    checks.push(recur.finish());

    Ok(checks)
}

/// Iterate the default identity grid, skipping nothing: every compiled-in
/// point satisfies nu > -k/2.
fn identity_grid_points() -> impl Iterator<Item = (StruveParams, f64)> {
    IDENTITY_KS.into_iter().flat_map(|k| {
        IDENTITY_NU_FACTORS.into_iter().flat_map(move |nf| {
            IDENTITY_CS.into_iter().flat_map(move |c| {
                IDENTITY_XS.into_iter().map(move |x| {
                    (
                        StruveParams::new(nf * k, k, c).expect("grid point is in-domain"),
                        x,
                    )
                })
            })
        })
    })
}

fn recurrence_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let mut rec1 = Agg::new("rec1_lowering_derivative");
    let mut rec2 = Agg::new("rec2_raising_derivative");
    let mut rec3 = Agg::new("rec3_difference_form");
    let mut rec4 = Agg::new("rec4_sum_form");
    let mut cross = Agg::new("rec_sum_reproduces_rec1");
    for (params, x) in identity_grid_points() {
        let r = rec1_residual(&params, x)?;
        rec1.record(r.point, r.relative_residual - tol(1e-9));
        let r = rec2_residual(&params, x)?;
        rec2.record(r.point, r.relative_residual - tol(1e-9));
        let r = rec3_residual(&params, x)?;
        rec3.record(r.point, r.relative_residual - tol(1e-9));
        let r = rec4_residual(&params, x)?;
        rec4.record(r.point, r.relative_residual - tol(1e-9));

        // Internal consistency: rec3 + rec4 collapse to
        // x S' + (nu/k) S = (x/k) S_{nu-k,c}.
        let jet = struve_jet(&params, x)?;
        let lower = struve(&params.shift_order(-1.0)?, x)?.value;
        let lhs = x * jet.dy + params.nu() / params.k() * jet.y;
        let rhs = x / params.k() * lower;
        let scale = (x * jet.dy).abs().max(rhs.abs()).max(1e-300);
        let point = Point {
            nu: Some(params.nu()),
            k: Some(params.k()),
            c: Some(params.c()),
            x: Some(x),
            ..Point::default()
        };
        cross.record(point, (lhs - rhs).abs() / scale - tol(1e-12));
    }
    Ok(vec![
        rec1.finish(),
        rec2.finish(),
        rec3.finish(),
        rec4.finish(),
        cross.finish(),
    ])
}

fn ode_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let mut agg = Agg::new("ode_residual");
    for (params, x) in identity_grid_points() {
        let r = ode_residual(&params, x)?;
        agg.record(r.point, r.relative_residual - tol(1e-9));
    }
    Ok(vec![agg.finish()])
}

fn integral_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let quad = QuadratureConfig::default();
    let mut sin_branch = Agg::new("integral_representation_sin");
    let mut sinh_branch = Agg::new("integral_representation_sinh");
    for &k in &IDENTITY_KS {
        for &nf in &IDENTITY_NU_FACTORS {
            let nu = nf * k;
            for &alpha in &INTEGRAL_ALPHAS {
                for &x in &IDENTITY_XS {
                    let params = StruveParams::new(nu, k, alpha * alpha)?;
                    let r = integral_rep(&params, alpha, x, &quad, opts.constants)?;
                    sin_branch.record(r.point, r.relative_residual - tol(1e-9));

                    let params = StruveParams::new(nu, k, -alpha * alpha)?;
                    let r = integral_rep(&params, alpha, x, &quad, opts.constants)?;
                    sinh_branch.record(r.point, r.relative_residual - tol(1e-9));
                }
            }
        }
    }
    // The k-beta decomposition underlies the representation; sweep a small
    // (r, nu, k) set including the endpoint-singular branch nu/k < 1/2.
    let mut decomp = Agg::new("kbeta_decomposition");
    for &k in &IDENTITY_KS {
        for &nf in &[-0.4, 0.0, 0.5, 2.0] {
            for &r in &[0usize, 1, 3, 10] {
                let rep = kbeta_decomposition_check(r, nf * k, k, &quad)?;
                decomp.record(rep.point, rep.relative_residual - tol(1e-8));
            }
        }
    }
    Ok(vec![sin_branch.finish(), sinh_branch.finish(), decomp.finish()])
}

fn closed_form_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let tol = |d: f64| opts.tol_override.unwrap_or(d);
    let mut cos_side = Agg::new("closed_form_one_minus_cos");
    let mut cosh_side = Agg::new("closed_form_cosh_minus_one");
    for &k in &CLOSED_KS {
        for &alpha in &INTEGRAL_ALPHAS {
            for &x in &CLOSED_XS {
                let r = closed_form_half_order(k, alpha, x, Sign::Plus, opts.constants)?;
                cos_side.record(r.point, r.relative_residual - tol(1e-12));
                let r = closed_form_half_order(k, alpha, x, Sign::Minus, opts.constants)?;
                cosh_side.record(r.point, r.relative_residual - tol(1e-12));
            }
        }
    }
    Ok(vec![cos_side.finish(), cosh_side.finish()])
}

fn turan_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let slack = opts.tol_override.unwrap_or(1e-12);
    let mut main = Agg::new("turan_inequality");
    let mut zero_shift = Agg::new("turan_zero_shift_exact");
    for &k in &IDENTITY_KS {
        for &nf in &TURAN_NU_FACTORS {
            let nu = nf * k;
            for &af in &TURAN_A_FACTORS {
                let a = af * k;
                if !(nu > a.abs() - 1.5 * k) {
                    continue;
                }
                let probe = TuranProbe::new(nu, a, k)?;
                main.absorb(turan_check_with_slack(&probe, &TURAN_XS, slack)?);
                if a == 0.0 {
                    for &x in &TURAN_XS {
                        let delta = crate::inequalities::turan_delta(&probe, x)?;
                        let point = Point {
                            nu: Some(nu),
                            a: Some(a),
                            k: Some(k),
                            x: Some(x),
                            ..Point::default()
                        };
                        zero_shift.record(point, delta.abs() - 1e-15);
                    }
                }
            }
        }
    }
    Ok(vec![main.finish(), zero_shift.finish()])
}

fn monotonicity_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let slack = opts.tol_override.unwrap_or(1e-12);
    let mut ratio = Agg::new("ratio_monotonicity");
    let mut derivative = Agg::new("ratio_derivative_nonnegative");
    let mut parameter = Agg::new("parameter_monotonicity");
    let mut chain = Agg::new("nu_ratio_decreasing");
    let mut psi = Agg::new("digamma_difference");
    for &k in &IDENTITY_KS {
        let nus: Vec<f64> = TURAN_NU_FACTORS.iter().map(|f| f * k).collect();
        for (i, &mu) in nus.iter().enumerate() {
            for &nu in nus.iter().skip(i) {
                ratio.absorb(ratio_monotonicity_check_with_slack(
                    mu, nu, k, &MONO_XS, slack,
                )?);
                derivative.absorb(ratio_derivative_check(
                    mu,
                    nu,
                    k,
                    &MONO_XS,
                    opts.tol_override.unwrap_or(1e-10),
                )?);
            }
        }
        parameter.absorb(parameter_monotonicity_check_with_slack(
            &inequality_grid(k),
            slack,
        )?);
        for &x in &TURAN_XS {
            chain.absorb(nu_ratio_decreasing_check_with_slack(k, &nus, x, slack)?);
        }
        for &nu in &nus {
            psi.absorb(digamma_difference_check(nu, k, 10, 1e-15)?);
        }
    }
    Ok(vec![
        ratio.finish(),
        derivative.finish(),
        parameter.finish(),
        chain.finish(),
        psi.finish(),
    ])
}

fn log_convexity_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let slack = opts.tol_override.unwrap_or(1e-12);
    let mut agg = Agg::new("log_convexity");
    for &k in &IDENTITY_KS {
        agg.absorb(log_convexity_check_with_slack(&inequality_grid(k), slack)?);
    }
    Ok(vec![agg.finish()])
}

/// Run one suite (or all of them, in the documented order).
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Gamma => gamma_suite(opts)?,
        Suite::Struve => struve_suite(opts)?,
        Suite::Recurrence => recurrence_suite(opts)?,
        Suite::Ode => ode_suite(opts)?,
        Suite::Integral => integral_suite(opts)?,
        Suite::ClosedForm => closed_form_suite(opts)?,
        Suite::Turan => turan_suite(opts)?,
        Suite::Monotonicity => monotonicity_suite(opts)?,
        Suite::LogConvexity => log_convexity_suite(opts)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in SUITE_ORDER {
                all.extend(run_suite(s, opts)?.checks);
            }
            all
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        suite: suite.to_string(),
        checks,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in SUITE_ORDER.iter().chain([Suite::All].iter()) {
            assert_eq!(Suite::from_str(&s.to_string()).unwrap(), *s);
        }
        assert!(Suite::from_str("nope").is_err());
    }

    #[test]
    fn deterministic_sampling() {
        let a = sample_domain_points(50, 7);
        let b = sample_domain_points(50, 7);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.0, q.0);
            assert_eq!(p.1, q.1);
        }
    }

    #[test]
    fn turan_suite_passes() {
        let rep = run_suite(Suite::Turan, &SuiteOptions::default()).unwrap();
        assert!(rep.passed, "{:#?}", rep.checks);
    }

    #[test]
    fn closed_form_suite_printed_constants_fail() {
        let opts = SuiteOptions {
            constants: ConstantSet::Printed,
            ..Default::default()
        };
        let rep = run_suite(Suite::ClosedForm, &opts).unwrap();
        assert!(!rep.passed);
    }
}
