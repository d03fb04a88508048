//! Special functions around the Lerch transcendent, double-exponential
//! quadrature for half-line integrals, and a catalog of definite-integral
//! identities that a verifier checks one against the other.
//!
//! The crate has four layers:
//!
//! * [`specfun`] — Lerch Φ(z,s,v), polylogarithm, Hurwitz/Riemann zeta,
//!   complex Gamma, Apostol–Bernoulli polynomials, order-derivatives and the
//!   Glaisher–Kinkelin constant, each with an error estimate and a strategy
//!   tag.
//! * [`quadrature`] — tanh-sinh and exp-sinh rules assembled into a complex
//!   half-line integrator that tolerates endpoint log/algebraic
//!   singularities and the removable 0/0 point the catalog integrands share
//!   at x = 1.
//! * [`catalog`] — the integral identities: each entry pairs a pointwise
//!   integrand with a closed form, a parameter-domain predicate and default
//!   parameters.
//! * [`verify`] — runs quadrature against closed forms, sweeps random
//!   parameters, and renders text/json/csv reports. The CLI in [`cli`] is a
//!   thin shell over it.
//!
//! All powers and logarithms anywhere in the crate use the principal branch,
//! arg ∈ (−π, π].

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;

/// Crate-wide error type. Evaluation routines refuse regimes they cannot
/// handle honestly instead of silently approximating.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("unsupported regime: {0}")]
    Unsupported(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("unknown entry `{0}`")]
    UnknownEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Work budgets for the evaluation strategies. The CLI exposes these as
/// `--precision {fast,default,high}`.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Term cap for the direct series (|z| ≤ 0.99).
    pub series_max_terms: usize,
    /// Term cap for the accelerated conditionally-convergent series (|z| = 1).
    pub accel_max_terms: usize,
    /// Quadrature tolerance used by the integral-representation strategy.
    pub quad_tol: f64,
    /// Quadrature level cap (nodes grow geometrically with level).
    pub quad_max_level: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Precision::Default.budget()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    Fast,
    Default,
    High,
}

impl Precision {
    pub fn budget(self) -> Budget {
        match self {
            Precision::Fast => Budget {
                series_max_terms: 20_000,
                accel_max_terms: 20_000,
                quad_tol: 1e-8,
                quad_max_level: 10,
            },
            Precision::Default => Budget {
                series_max_terms: 100_000,
                accel_max_terms: 100_000,
                quad_tol: 1e-10,
                quad_max_level: 12,
            },
            Precision::High => Budget {
                series_max_terms: 400_000,
                accel_max_terms: 100_000,
                quad_tol: 1e-12,
                quad_max_level: 13,
            },
        }
    }
}
