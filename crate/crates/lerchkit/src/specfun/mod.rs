//! Special functions: Lerch transcendent Φ(z,s,v) and its relatives.
//!
//! Every nontrivial evaluation returns an [`EvalResult`] carrying the value,
//! an error estimate (an upper-bound estimate, not a guarantee) and the
//! strategy that produced it. Wherever two independent strategies cover the
//! same arguments they must agree within their combined estimates; the test
//! suite enforces that.

mod accel;
mod bernoulli;
mod constants;
mod gamma;
mod hurwitz;
mod lerch;
mod polylog;

pub use bernoulli::{apostol_bernoulli, bernoulli_polynomial};
pub use constants::glaisher;
pub use gamma::gamma;
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta};
pub use lerch::{lerch_phi, lerch_phi_strategies, LerchArgs};
pub use polylog::{polylog, polylog_jonquiere, polylog_sderiv};

use num_complex::Complex64;
use serde::Serialize;

/// Which evaluation path produced a value. Recorded for diagnostics and for
/// the dual-strategy agreement checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Direct series, |z| ≤ 0.99, geometric tail bound.
    Series,
    /// Closed form via Apostol–Bernoulli polynomials (s a non-positive integer).
    ApostolBernoulli,
    /// Conditionally convergent unit-circle series with iterated Δ² acceleration.
    ConditionalSeries,
    /// Integral representation evaluated by double-exponential quadrature.
    IntegralRep,
    /// Euler–Maclaurin summation (Hurwitz zeta).
    EulerMaclaurin,
    /// Exact Bernoulli-polynomial value of ζ(−n, v).
    BernoulliExact,
    /// Unit-circle polylog through two Hurwitz zeta values at 1 − s.
    Jonquiere,
    /// Richardson-extrapolated central difference in the order parameter.
    OrderDerivative,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Series => "series",
            Strategy::ApostolBernoulli => "apostol_bernoulli",
            Strategy::ConditionalSeries => "conditional_series",
            Strategy::IntegralRep => "integral_rep",
            Strategy::EulerMaclaurin => "euler_maclaurin",
            Strategy::BernoulliExact => "bernoulli_exact",
            Strategy::Jonquiere => "jonquiere",
            Strategy::OrderDerivative => "order_derivative",
        }
    }
}

/// Value plus diagnostics for a special-function evaluation.
#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    pub value: Complex64,
    /// Upper-bound estimate of the absolute error.
    pub est_error: f64,
    pub strategy: Strategy,
    /// Series terms or quadrature nodes consumed.
    pub terms_or_nodes: usize,
}

impl EvalResult {
    pub(crate) fn new(value: Complex64, est_error: f64, strategy: Strategy, n: usize) -> Self {
        EvalResult {
            value,
            est_error,
            strategy,
            terms_or_nodes: n,
        }
    }
}
