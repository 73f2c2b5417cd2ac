//! Command-line front end: single evaluations, CSV tables and named
//! verification suites with machine-readable reports.
//!
//! Exit codes: 0 success; 1 verification failure (report still emitted);
//! 2 domain/flag errors; 3 internal numerical failure; 4 unwritable output.

// Negated comparisons like !(x > 0.0) are deliberate: they reject NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use clap::{Parser, Subcommand, ValueEnum};
use kstruve::struve::{
    modified_struve_opts, normalized_struve_opts, struve_opts, EvalOptions, EvalResult,
    StruveParams, DEFAULT_MAX_TERMS,
};
use kstruve::verify::{default_grids, run_suite, Suite, SuiteOptions};
use kstruve::{ConstantSet, Error};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "kstruve",
    about = "Evaluate k-Struve functions and verify their identities and inequalities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Variant {
    /// S^k_{nu,c}(x)
    #[default]
    Struve,
    /// L^k_nu(x) = S^k_{nu,-1}(x); ignores --c
    Modified,
    /// Normalized odd series; ignores --c, accepts any real x
    Normalized,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one point and print an x,value,err_estimate,terms record.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        k: f64,
        /// Sign/scale parameter c (used by the plain variant only).
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t)]
        variant: Variant,
        /// Emit the record as JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Write a CSV table over an x grid (byte-identical across reruns).
    Table {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        k: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_start: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_end: f64,
        #[arg(long)]
        x_step: f64,
        #[arg(long, value_enum, default_value_t)]
        variant: Variant,
        /// Output CSV path.
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Run a named verification suite and emit a JSON report.
    Verify {
        /// One of: gamma, struve, recurrence, ode, integral, closedform,
        /// turan, monotonicity, logconvexity, all.
        #[arg(long)]
        suite: Option<String>,
        /// Replace every check tolerance in the suite.
        #[arg(long)]
        tol: Option<f64>,
        /// Use the as-published integral/closed-form constants (known to
        /// fail away from k = alpha = 1; kept as a regression guard).
        #[arg(long)]
        paper_literal: bool,
        /// Write the JSON report to a file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Print the compiled-in default grids and exit.
        #[arg(long)]
        show_grid: bool,
    },
}

#[derive(Serialize)]
struct OutputRecord {
    x: f64,
    value: f64,
    err_estimate: f64,
    terms: usize,
}

impl OutputRecord {
    fn new(x: f64, r: EvalResult) -> Self {
        OutputRecord {
            x,
            value: r.value,
            err_estimate: r.abs_error_estimate,
            terms: r.terms_used,
        }
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}\n",
            fmt17(self.x),
            fmt17(self.value),
            fmt17(self.err_estimate),
            self.terms
        )
    }
}

const CSV_HEADER: &str = "x,value,err_estimate,terms\n";

/// 17 significant digits, round-trip safe.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Write to standard output, treating a closed pipe as success.
fn emit(body: &str) -> Result<(), Failure> {
    use std::io::ErrorKind;
    let mut out = std::io::stdout().lock();
    match out.write_all(body.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(fail(3, format!("cannot write to stdout: {e}"))),
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Domain misuse exits 2, internal numerical trouble exits 3.
fn eval_failure(err: Error) -> Failure {
    let code = match err {
        Error::Domain(_) | Error::Pole { .. } => 2,
        Error::Overflow { .. } | Error::QuadratureNotConverged { .. } => 3,
    };
    fail(code, err.to_string())
}

fn max_terms_from_env() -> Result<usize, Failure> {
    match std::env::var("KSTRUVE_MAX_TERMS") {
        Err(_) => Ok(DEFAULT_MAX_TERMS),
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| {
                fail(
                    2,
                    format!("KSTRUVE_MAX_TERMS must be a positive integer, got '{raw}'"),
                )
            }),
    }
}

fn evaluate(
    variant: Variant,
    nu: f64,
    k: f64,
    c: f64,
    x: f64,
    opts: &EvalOptions,
) -> Result<EvalResult, Failure> {
    let result = match variant {
        Variant::Struve => {
            let params = StruveParams::new(nu, k, c).map_err(eval_failure)?;
            struve_opts(&params, x, opts)
        }
        Variant::Modified => modified_struve_opts(nu, k, x, opts),
        Variant::Normalized => normalized_struve_opts(nu, k, x, opts),
    };
    let result = result.map_err(eval_failure)?;
    if !result.value.is_finite() {
        return Err(fail(
            3,
            format!("evaluation left the finite f64 range (value = {})", result.value),
        ));
    }
    Ok(result)
}

fn cmd_eval(
    variant: Variant,
    nu: f64,
    k: f64,
    c: f64,
    x: f64,
    json: bool,
) -> Result<(), Failure> {
    let opts = EvalOptions {
        max_terms: max_terms_from_env()?,
    };
    let record = OutputRecord::new(x, evaluate(variant, nu, k, c, x, &opts)?);
    if json {
        let body = serde_json::to_string(&record)
            .map_err(|e| fail(3, format!("failed to serialize record: {e}")))?;
        emit(&format!("{body}\n"))
    } else {
        emit(&format!("{CSV_HEADER}{}", record.csv_row()))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    variant: Variant,
    nu: f64,
    k: f64,
    c: f64,
    x_start: f64,
    x_end: f64,
    x_step: f64,
    out: &std::path::Path,
) -> Result<(), Failure> {
    if !(x_step > 0.0) {
        return Err(fail(2, format!("x_step must be positive, got {x_step}")));
    }
    if x_start > x_end {
        return Err(fail(
            2,
            format!("x_start must not exceed x_end, got {x_start} > {x_end}"),
        ));
    }
    let opts = EvalOptions {
        max_terms: max_terms_from_env()?,
    };
    let steps = ((x_end - x_start) / x_step + 1e-9).floor() as usize;
    let mut body = String::from(CSV_HEADER);
    for i in 0..=steps {
        let x = x_start + (i as f64) * x_step;
        let record = OutputRecord::new(x, evaluate(variant, nu, k, c, x, &opts)?);
        body.push_str(&record.csv_row());
    }
    let mut file = std::fs::File::create(out)
        .map_err(|e| fail(4, format!("cannot write {}: {e}", out.display())))?;
    file.write_all(body.as_bytes())
        .map_err(|e| fail(4, format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}

fn cmd_verify(
    suite: Option<&str>,
    tol: Option<f64>,
    paper_literal: bool,
    out: Option<&std::path::Path>,
    show_grid: bool,
) -> Result<(), Failure> {
    if show_grid {
        let body = serde_json::to_string_pretty(&default_grids())
            .map_err(|e| fail(3, format!("failed to serialize grids: {e}")))?;
        emit(&format!("{body}\n"))?;
        return Ok(());
    }
    let name = suite.ok_or_else(|| fail(2, "--suite is required (or use --show-grid)"))?;
    let suite = Suite::from_str(name).map_err(|e| fail(2, e.to_string()))?;
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(fail(2, format!("--tol must be a positive real, got {t}")));
        }
    }
    let opts = SuiteOptions {
        tol_override: tol,
        constants: if paper_literal {
            ConstantSet::Printed
        } else {
            ConstantSet::Derived
        },
    };
    let report = run_suite(suite, &opts).map_err(|e| fail(3, e.to_string()))?;
    let body = serde_json::to_string_pretty(&report)
        .map_err(|e| fail(3, format!("failed to serialize report: {e}")))?;
    match out {
        Some(path) => std::fs::write(path, body.as_bytes())
            .map_err(|e| fail(4, format!("cannot write {}: {e}", path.display())))?,
        None => emit(&format!("{body}\n"))?,
    }
    if report.passed {
        Ok(())
    } else {
        Err(fail(1, format!("suite '{}' failed", report.suite)))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval {
            nu,
            k,
            c,
            x,
            variant,
            json,
        } => cmd_eval(*variant, *nu, *k, *c, *x, *json),
        Command::Table {
            nu,
            k,
            c,
            x_start,
            x_end,
            x_step,
            variant,
            out,
        } => cmd_table(*variant, *nu, *k, *c, *x_start, *x_end, *x_step, out),
        Command::Verify {
            suite,
            tol,
            paper_literal,
            out,
            show_grid,
        } => cmd_verify(suite.as_deref(), *tol, *paper_literal, out.as_deref(), *show_grid),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
