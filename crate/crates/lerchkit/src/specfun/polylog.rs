//! Polylogarithm Li_s(z) = z·Φ(z, s, 1) plus the unit-circle continuation
//! through Hurwitz zeta, and the order-derivative ∂Li_s(z)/∂s.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::gamma;
use super::hurwitz::hurwitz_zeta;
use super::lerch::{lerch_phi, LerchArgs};
use super::{EvalResult, Strategy};
use crate::complex::near_integer;
use crate::{Budget, Error, Result};

fn on_circle(z: Complex64) -> bool {
    (z.norm() - 1.0).abs() <= 1e-12
}

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re >= 1.0 - 1e-12
}

/// Li_s(z). On the unit circle non-integer orders go through the inversion
/// formula (two Hurwitz zeta values at 1 − s); elsewhere through Φ.
pub fn polylog(s: Complex64, z: Complex64, budget: &Budget) -> Result<EvalResult> {
    if on_cut(z) {
        return Err(Error::Domain(format!(
            "polylog branch cut: z = {z} lies on [1, ∞)"
        )));
    }
    if z.norm() == 0.0 {
        return Ok(EvalResult::new(Complex64::new(0.0, 0.0), 0.0, Strategy::Series, 1));
    }
    if on_circle(z) {
        let int_order = matches!(near_integer(s, 1e-12), Some(_));
        if int_order || s.re > 0.0 {
            // non-positive integer order → Apostol; Re(s) > 0 → accelerated
            // series; both via Φ.
            let phi = lerch_phi(&LerchArgs::new(z, s, Complex64::new(1.0, 0.0)), budget)?;
            return Ok(EvalResult::new(
                z * phi.value,
                phi.est_error,
                phi.strategy,
                phi.terms_or_nodes,
            ));
        }
        return polylog_jonquiere(s, z);
    }
    let phi = lerch_phi(&LerchArgs::new(z, s, Complex64::new(1.0, 0.0)), budget)?;
    Ok(EvalResult::new(
        z * phi.value,
        phi.est_error * z.norm(),
        phi.strategy,
        phi.terms_or_nodes,
    ))
}

/// Inversion route: for z = e^{2πix}, x ∈ (0,1), and non-integer s,
///
///   Li_s(z) = (2π)^s Γ(1−s)/(2πi) · [e^{iπs/2} ζ(1−s, 1−x) − e^{−iπs/2} ζ(1−s, x)].
///
/// Valid for every non-integer order; the public entry point for tests that
/// pit it against the series strategies.
pub fn polylog_jonquiere(s: Complex64, z: Complex64) -> Result<EvalResult> {
    if !on_circle(z) || on_cut(z) {
        return Err(Error::Domain("jonquiere route needs |z| = 1, z ≠ 1".into()));
    }
    if near_integer(s, 1e-9).is_some() {
        return Err(Error::Domain(
            "jonquiere route is singular at integer order".into(),
        ));
    }
    let mut x = z.arg() / (2.0 * PI);
    if x < 0.0 {
        x += 1.0;
    }
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let g = gamma(one_minus_s)?;
    let za = hurwitz_zeta(one_minus_s, Complex64::new(1.0 - x, 0.0))?;
    let zb = hurwitz_zeta(one_minus_s, Complex64::new(x, 0.0))?;
    let e = (Complex64::new(0.0, PI / 2.0) * s).exp();
    let bracket = e * za.value - zb.value / e;
    let pref = ((2.0 * PI).ln() * s).exp() * g / Complex64::new(0.0, 2.0 * PI);
    let value = pref * bracket;
    let est = pref.norm() * (za.est_error + zb.est_error) + 4.0 * f64::EPSILON * value.norm();
    Ok(EvalResult::new(
        value,
        est,
        Strategy::Jonquiere,
        za.terms_or_nodes + zb.terms_or_nodes,
    ))
}

/// ∂Li_s(z)/∂s by Richardson-extrapolated central differences over the order,
/// steps h ∈ {1e−3, 5e−4, 2.5e−4}. On the unit circle every stencil point
/// uses the inversion route, which is analytic in s between integers.
pub fn polylog_sderiv(s: Complex64, z: Complex64, budget: &Budget) -> Result<EvalResult> {
    if z.norm() > 1.0 + 1e-12 || on_cut(z) {
        return Err(Error::Domain(
            "polylog_sderiv needs |z| ≤ 1 with z off the cut [1, ∞)".into(),
        ));
    }
    if z.norm() == 0.0 {
        // Li_s(0) = 0 identically in s.
        return Ok(EvalResult::new(Complex64::new(0.0, 0.0), 0.0, Strategy::OrderDerivative, 1));
    }
    let circle = on_circle(z);
    let steps = [1e-3, 5e-4, 2.5e-4];
    let mut diffs = [Complex64::new(0.0, 0.0); 3];
    let mut est_in = 0.0f64;
    let mut work = 0usize;
    for (i, h) in steps.iter().enumerate() {
        let eval = |sigma: Complex64| -> Result<EvalResult> {
            if circle {
                if near_integer(sigma, 1e-9).is_some() {
                    return Err(Error::Unsupported(format!(
                        "order-derivative stencil hits integer order {sigma}"
                    )));
                }
                polylog_jonquiere(sigma, z)
            } else {
                polylog(sigma, z, budget)
            }
        };
        let hi = eval(s + *h)?;
        let lo = eval(s - *h)?;
        diffs[i] = (hi.value - lo.value) / (2.0 * h);
        est_in = est_in.max((hi.est_error + lo.est_error) / (2.0 * h));
        work += hi.terms_or_nodes + lo.terms_or_nodes;
    }
    let ab = diffs[1] + (diffs[1] - diffs[0]) / 3.0;
    let bc = diffs[2] + (diffs[2] - diffs[1]) / 3.0;
    let extrap = bc + (bc - ab) / 15.0;
    let est = est_in + (bc - ab).norm() / 15.0 + f64::EPSILON * extrap.norm();
    Ok(EvalResult::new(extrap, est, Strategy::OrderDerivative, work))
}
