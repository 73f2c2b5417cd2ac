//! k-Struve functions and their verification.
//!
//! This crate evaluates the k-Struve function S^k_{nu,c}(x), its modified
//! (L^k_nu) and normalized (curly-L^k_nu) variants and the underlying
//! k-gamma function family, and machine-verifies the identities and
//! inequalities these functions satisfy: the non-homogeneous second-order
//! ODE, four recurrence relations, two integral representations with
//! half-order closed forms, Turan-type and log-convexity inequalities, and
//! the monotonicity theorems for ratios and parameters.
//!
//! Organization:
//! - [`special`]: Gamma_k, ln Gamma_k, Psi_k, Psi_k', B_k and the classical
//!   kernels behind them.
//! - [`struve`]: series evaluation with truncation-error control.
//! - [`identities`]: residual checks (ODE, recurrences, integral forms).
//! - [`inequalities`]: grid certification of the inequality theorems.
//! - [`numerics`]: tanh-sinh quadrature, compensated summation, double-double
//!   arithmetic and the extended-precision series oracle.
//! - [`verify`]: named verification suites over compiled-in grids.

// Negated comparisons like !(x > 0.0) are deliberate: they reject NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod identities;
pub mod inequalities;
pub mod numerics;
pub mod special;
pub mod struve;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use identities::{ConstantSet, ResidualReport, Sign};
pub use inequalities::{Direction, GridSpec, RatioSequence, VerificationReport};
pub use numerics::{QuadratureConfig, QuadratureResult};
pub use struve::{EvalOptions, EvalResult, StruveParams, TuranProbe, DEFAULT_MAX_TERMS};
pub use verify::{run_suite, Suite, SuiteOptions, SuiteReport};
pub use witness::Point;
