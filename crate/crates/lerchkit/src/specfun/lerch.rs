//! The Lerch transcendent Φ(z, s, v) = Σ_{n≥0} zⁿ (v+n)^{−s} and its
//! analytic continuation.
//!
//! Four strategies, dispatched first-match:
//!
//! (a) |z| ≤ 0.99 — direct series with a geometric tail bound;
//! (b) s a non-positive integer, z ≠ 1 — Φ(z, −n, v) = −B_{n+1}(v; z)/(n+1)
//!     through the Apostol–Bernoulli recurrence;
//! (c) |z| = 1, z ≠ 1, Re(s) > 0 — the conditionally convergent series
//!     accelerated by iterated Δ²;
//! (d) Re(s) > 0, Re(v) > 0, |z| ≤ 1, z ∉ [1, ∞) — the integral
//!     representation Φ = (1/Γ(s)) ∫₀^∞ t^{s−1} e^{−vt}/(1 − z e^{−t}) dt
//!     under double-exponential quadrature.
//!
//! Anything else is an unsupported-regime error, never a silent
//! approximation.

use num_complex::Complex64;

use super::accel::iterated_aitken;
use super::bernoulli::apostol_bernoulli;
use super::gamma::gamma;
use super::{EvalResult, Strategy};
use crate::complex::{cpow_principal, near_integer};
use crate::quadrature::{integrate_halfline, Integrand};
use crate::{Budget, Error, Result};

/// Arguments of Φ(z, s, v).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LerchArgs {
    pub z: Complex64,
    pub s: Complex64,
    pub v: Complex64,
}

impl LerchArgs {
    pub fn new(z: Complex64, s: Complex64, v: Complex64) -> Self {
        LerchArgs { z, s, v }
    }
}

const SERIES_RADIUS: f64 = 0.99;
const CIRCLE_TOL: f64 = 1e-12;

fn on_unit_circle(z: Complex64) -> bool {
    (z.norm() - 1.0).abs() <= CIRCLE_TOL
}

fn is_one(z: Complex64) -> bool {
    (z - Complex64::new(1.0, 0.0)).norm() <= CIRCLE_TOL
}

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re >= 1.0
}

fn check_pole(v: Complex64) -> Result<()> {
    if let Some(k) = near_integer(v, 1e-12) {
        if k <= 0 {
            return Err(Error::Pole(format!("Lerch v = {k} is in the pole set")));
        }
    }
    Ok(())
}

/// Evaluate Φ(z, s, v) with the first applicable strategy.
pub fn lerch_phi(args: &LerchArgs, budget: &Budget) -> Result<EvalResult> {
    check_pole(args.v)?;
    for strat in applicable_strategies(args) {
        return run_strategy(strat, args, budget);
    }
    Err(Error::Unsupported(format!(
        "lerch_phi: no strategy for z = {}, s = {}, v = {} (|z| = {})",
        args.z,
        args.s,
        args.v,
        args.z.norm()
    )))
}

/// Every strategy whose preconditions hold, in dispatch order. Exposed so
/// tests can demand agreement between overlapping strategies.
pub fn lerch_phi_strategies(args: &LerchArgs, budget: &Budget) -> Vec<(Strategy, Result<EvalResult>)> {
    applicable_strategies(args)
        .into_iter()
        .map(|s| (s, run_strategy(s, args, budget)))
        .collect()
}

fn applicable_strategies(args: &LerchArgs) -> Vec<Strategy> {
    let mut out = Vec::new();
    let z = args.z;
    let s = args.s;
    if z.norm() <= SERIES_RADIUS {
        out.push(Strategy::Series);
    }
    if matches!(near_integer(s, 1e-12), Some(k) if k <= 0) && !is_one(z) {
        out.push(Strategy::ApostolBernoulli);
    }
    if on_unit_circle(z) && !is_one(z) && s.re > 0.0 {
        out.push(Strategy::ConditionalSeries);
    }
    if s.re > 0.0 && args.v.re > 0.0 && z.norm() <= 1.0 + CIRCLE_TOL && !on_cut(z) && !is_one(z) {
        out.push(Strategy::IntegralRep);
    }
    out
}

fn run_strategy(strat: Strategy, args: &LerchArgs, budget: &Budget) -> Result<EvalResult> {
    match strat {
        Strategy::Series => series(args, budget),
        Strategy::ApostolBernoulli => apostol(args),
        Strategy::ConditionalSeries => conditional_series(args, budget),
        Strategy::IntegralRep => integral_rep(args, budget),
        _ => unreachable!("not a Lerch strategy"),
    }
}

/// (a) Direct series. Terms are zⁿ(v+n)^{−s}; once the polynomial factor is
/// past its peak the tail is bounded by a geometric series in |z|.
fn series(args: &LerchArgs, budget: &Budget) -> Result<EvalResult> {
    let LerchArgs { z, s, v } = *args;
    let r = z.norm();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let mut max_abs = 0.0f64;
    let mut prev_mag = f64::INFINITY;
    let mut decreasing_run = 0u32;
    for n in 0..budget.series_max_terms {
        let base = v + n as f64;
        if base.norm() < 1e-12 {
            return Err(Error::Pole(format!("Lerch series term at v + {n} = 0")));
        }
        let term = zp * cpow_principal(base, -s)?;
        sum += term;
        let mag = term.norm();
        max_abs = max_abs.max(mag);
        decreasing_run = if mag <= prev_mag { decreasing_run + 1 } else { 0 };
        prev_mag = mag;
        zp *= z;
        if zp.norm() == 0.0 {
            // z = 0 (or underflowed): the series has terminated exactly.
            let est = 4.0 * f64::EPSILON * max_abs;
            return Ok(EvalResult::new(sum, est, Strategy::Series, n + 1));
        }
        // Geometric tail bound once |term| is decreasing: Σ_{k>n} ≤ mag·r/(1−r).
        if decreasing_run >= 4 && r < 1.0 {
            let tail = mag * r / (1.0 - r);
            if tail <= 1e-16 * sum.norm().max(1e-300) || tail < 1e-305 {
                let est = tail + 4.0 * f64::EPSILON * max_abs;
                return Ok(EvalResult::new(sum, est, Strategy::Series, n + 1));
            }
        }
    }
    Err(Error::Unsupported(format!(
        "lerch series did not settle within {} terms (|z| = {r})",
        budget.series_max_terms
    )))
}

/// (b) Φ(z, −n, v) = −B_{n+1}(v; z)/(n+1).
fn apostol(args: &LerchArgs) -> Result<EvalResult> {
    let n = match near_integer(args.s, 1e-12) {
        Some(k) if k <= 0 => (-k) as usize,
        _ => return Err(Error::Domain("apostol strategy needs s ∈ {0, −1, −2, …}".into())),
    };
    let b = apostol_bernoulli(n + 1, args.v, args.z)?;
    let value = -b / (n as f64 + 1.0);
    let scale = args.v.norm().max(1.0).powi(n as i32 + 1)
        / (args.z - Complex64::new(1.0, 0.0)).norm().min(1.0);
    Ok(EvalResult::new(
        value,
        f64::EPSILON * scale * (n as f64 + 2.0),
        Strategy::ApostolBernoulli,
        n + 1,
    ))
}

/// (c) Unit-circle series, Dirichlet-convergent for Re(s) > 0, accelerated.
fn conditional_series(args: &LerchArgs, budget: &Budget) -> Result<EvalResult> {
    let LerchArgs { z, s, v } = *args;
    const WINDOW: usize = 96;
    let mut sums: Vec<Complex64> = Vec::new();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    let mut block = 48usize;
    let mut prev_block: Option<Complex64> = None;
    let mut best: Option<(Complex64, f64)> = None;
    while n < budget.accel_max_terms {
        let target = (n + block).min(budget.accel_max_terms);
        while n < target {
            let base = v + n as f64;
            if base.norm() < 1e-12 {
                return Err(Error::Pole(format!("Lerch series term at v + {n} = 0")));
            }
            acc += zp * cpow_principal(base, -s)?;
            zp *= z;
            sums.push(acc);
            n += 1;
        }
        let lo = sums.len().saturating_sub(WINDOW);
        let a = iterated_aitken(&sums[lo..]);
        // Within-table agreement alone can be a spurious plateau; demand a
        // second, longer partial-sum window land on the same value.
        let scale = a.value.norm().max(1e-300);
        let drift = prev_block.map(|p| (a.value - p).norm());
        let est = a
            .est_error
            .max(drift.unwrap_or(f64::INFINITY))
            .max(8.0 * f64::EPSILON * scale);
        match best {
            Some((_, e)) if e <= est => {}
            _ => best = Some((a.value, est)),
        }
        if a.converged && drift.is_some_and(|d| d <= 1e-12 * scale) {
            return Ok(EvalResult::new(a.value, est, Strategy::ConditionalSeries, n));
        }
        prev_block = Some(a.value);
        block *= 2;
    }
    // Budget exhausted: hand back the best transform with its honest spread.
    let (value, est) = best.unwrap();
    Ok(EvalResult::new(value, est, Strategy::ConditionalSeries, n))
}

/// (d) Integral representation via the quadrature oracle.
fn integral_rep(args: &LerchArgs, budget: &Budget) -> Result<EvalResult> {
    let LerchArgs { z, s, v } = *args;
    let g = gamma(s)?;
    let sm1 = s - 1.0;
    let f = Integrand::new(
        move |t: f64| {
            let tc = Complex64::new(t, 0.0);
            let num = (sm1 * tc.ln()).exp() * (-v * t).exp();
            let den = Complex64::new(1.0, 0.0) - z * (-t).exp();
            num / den
        },
        vec![1.0],
    );
    let q = integrate_halfline(&f, budget.quad_tol, budget.quad_max_level)?;
    if !q.converged {
        return Err(Error::Unsupported(format!(
            "lerch integral representation did not converge (est {:.3e})",
            q.est_error
        )));
    }
    let value = q.value / g;
    let est = (q.est_error + f64::EPSILON * q.value.norm()) / g.norm();
    Ok(EvalResult::new(value, est, Strategy::IntegralRep, q.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Precision;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn phi(z: Complex64, s: Complex64, v: Complex64) -> EvalResult {
        lerch_phi(&LerchArgs::new(z, s, v), &Budget::default()).unwrap()
    }

    #[test]
    fn degenerate_and_geometric_values() {
        // Φ(0, s, v) = v^{−s}
        let r = phi(c(0.0, 0.0), c(2.5, -1.0), c(1.7, 0.3));
        let want = cpow_principal(c(1.7, 0.3), c(-2.5, 1.0)).unwrap();
        assert!((r.value - want).norm() < 1e-14);

        // Φ(1/2, 0, 1) = 2 (geometric series)
        let r = phi(c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        assert!((r.value - c(2.0, 0.0)).norm() < 1e-13, "{}", r.value);

        // Φ(1/2, 1, 1) = 2 log 2
        let r = phi(c(0.5, 0.0), c(1.0, 0.0), c(1.0, 0.0));
        assert!((r.value.re - 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn pole_set_rejected() {
        for v in [0.0, -1.0, -5.0] {
            let e = lerch_phi(&LerchArgs::new(c(0.5, 0.0), c(1.0, 0.0), c(v, 0.0)), &Budget::default());
            assert!(matches!(e, Err(Error::Pole(_))), "v = {v}");
        }
    }

    #[test]
    fn unsupported_regime_is_an_error() {
        // |z| between 0.99 and 1 with Re(s) ≤ 0: nothing applies.
        let e = lerch_phi(
            &LerchArgs::new(c(0.995, 0.0), c(-0.5, 0.0), c(1.0, 0.0)),
            &Budget::default(),
        );
        assert!(matches!(e, Err(Error::Unsupported(_))));
        // z on the cut [1, ∞) with series/apostol unavailable.
        let e = lerch_phi(
            &LerchArgs::new(c(1.5, 0.0), c(2.0, 0.0), c(1.0, 0.0)),
            &Budget::default(),
        );
        assert!(matches!(e, Err(Error::Unsupported(_))));
    }

    #[test]
    fn reference_value_interior() {
        // 30-digit reference for an interior point.
        let r = phi(c(0.3, 0.4), c(2.5, 0.0), c(1.7, -0.2));
        let want = c(0.26122168971293161182, 0.12096231429081645244);
        assert!((r.value - want).norm() < 1e-14, "{} vs {}", r.value, want);
        assert_eq!(r.strategy, Strategy::Series);
    }

    #[test]
    fn abel_oracle_for_negative_integer_order() {
        // Φ(i, −2, 3/2) by strategy (b) against Abel summation of the
        // divergent series: lim_{r→1⁻} Σ (v+n)² (r i)ⁿ, Richardson in (1−r).
        let z = c(0.0, 1.0);
        let v = c(1.5, 0.0);
        let got = phi(z, c(-2.0, 0.0), v);
        assert_eq!(got.strategy, Strategy::ApostolBernoulli);

        let abel = |r: f64| -> Complex64 {
            let zr = z * r;
            let mut acc = c(0.0, 0.0);
            let mut zp = c(1.0, 0.0);
            for n in 0..200_000usize {
                let b = v + n as f64;
                acc += zp * b * b;
                zp *= zr;
                // geometric tail of the polynomially weighted series
                if zp.norm() * (v.norm() + n as f64 + 2.0).powi(2) / (1.0 - r) < 1e-18 {
                    break;
                }
            }
            acc
        };
        // Radii 1−2^{-k}: successive Richardson elimination of (1−r) powers.
        let mut vals: Vec<Complex64> = (3..9).map(|k| abel(1.0 - 0.5f64.powi(k))).collect();
        for j in 1..vals.len() {
            for i in (j..vals.len()).rev() {
                let f = 2.0f64.powi(j as i32);
                vals[i] = (vals[i] * f - vals[i - 1]) / (f - 1.0);
            }
        }
        let oracle = *vals.last().unwrap();
        assert!(
            (got.value - oracle).norm() < 1e-9,
            "{} vs abel {}",
            got.value,
            oracle
        );
        // And the frozen 30-digit value.
        assert!((got.value - c(-0.375, 0.625)).norm() < 1e-13);
    }

    #[test]
    fn strategies_agree_where_they_overlap() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let budget = Budget::default();
        let mut checked = 0usize;
        for _ in 0..400 {
            let z = Complex64::from_polar(rng.gen_range(0.05..0.95), rng.gen_range(-3.0..3.0));
            let s = c(rng.gen_range(0.2..6.0), rng.gen_range(-2.0..2.0));
            let v = c(rng.gen_range(0.2..5.0), rng.gen_range(-1.0..1.0));
            let args = LerchArgs::new(z, s, v);
            let results = lerch_phi_strategies(&args, &budget);
            let ok: Vec<&EvalResult> = results
                .iter()
                .filter_map(|(_, r)| r.as_ref().ok())
                .collect();
            if ok.len() < 2 {
                continue;
            }
            checked += 1;
            for w in ok.windows(2) {
                let tol = (w[0].est_error + w[1].est_error).max(1e-13 * w[0].value.norm());
                assert!(
                    (w[0].value - w[1].value).norm() <= tol.max(1e-12),
                    "z={z} s={s} v={v}: {} vs {} (tol {tol:.2e})",
                    w[0].value,
                    w[1].value
                );
            }
        }
        assert!(checked > 100, "only {checked} overlapping samples");
    }

    #[test]
    fn circle_acceleration_matches_integral_rep() {
        // Strategy (c) against (d) on the unit circle.
        let budget = Precision::Default.budget();
        for (theta, s, v) in [
            (5.0 / 6.0, c(1.0, 0.0), c(2.5, 0.0)),
            (2.0 / 3.0, c(0.7, 0.0), c(1.2, 0.0)),
            (1.0, c(2.0, 1.0), c(1.5, -0.2)),
        ] {
            let z = Complex64::from_polar(1.0, std::f64::consts::PI * theta);
            let args = LerchArgs::new(z, s, v);
            let all = lerch_phi_strategies(&args, &budget);
            let cond = all
                .iter()
                .find(|(st, _)| *st == Strategy::ConditionalSeries)
                .and_then(|(_, r)| r.as_ref().ok())
                .copied()
                .expect("conditional series applies");
            let quad = all
                .iter()
                .find(|(st, _)| *st == Strategy::IntegralRep)
                .and_then(|(_, r)| r.as_ref().ok())
                .copied()
                .expect("integral rep applies");
            let tol = (cond.est_error + quad.est_error).max(1e-11);
            assert!(
                (cond.value - quad.value).norm() <= tol,
                "theta={theta}: {} vs {} tol {tol:.2e}",
                cond.value,
                quad.value
            );
        }
    }

    #[test]
    fn recurrence_phi_eq_vs_plus_z_shift() {
        // Φ(z,s,v) = v^{−s} + z Φ(z,s,v+1) across regimes.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4242);
        let budget = Budget::default();
        let mut per_regime = [0usize; 3];
        while per_regime.iter().any(|&k| k < 200) {
            let pick = rng.gen_range(0..3usize);
            let (z, s) = match pick {
                0 => (
                    Complex64::from_polar(rng.gen_range(0.05..0.9), rng.gen_range(-3.0..3.0)),
                    c(rng.gen_range(-4.0..4.0), rng.gen_range(-2.0..2.0)),
                ),
                1 => (
                    Complex64::from_polar(rng.gen_range(0.05..0.9), rng.gen_range(-3.0..3.0)),
                    c(-(rng.gen_range(0..6) as f64), 0.0),
                ),
                _ => (
                    Complex64::from_polar(1.0, rng.gen_range(0.4..5.88)),
                    c(rng.gen_range(0.3..4.0), 0.0),
                ),
            };
            let v = c(rng.gen_range(0.3..4.0), rng.gen_range(-0.5..0.5));
            let a = lerch_phi(&LerchArgs::new(z, s, v), &budget);
            let b = lerch_phi(&LerchArgs::new(z, s, v + 1.0), &budget);
            let (a, b) = match (a, b) {
                (Ok(a), Ok(b)) => (a, b),
                _ => continue,
            };
            let vs = cpow_principal(v, -s).unwrap();
            let resid = (a.value - vs - z * b.value).norm();
            let tol = 4.0 * (a.est_error + b.est_error)
                + 1e-12 * a.value.norm().max(vs.norm()).max(1.0);
            assert!(resid <= tol, "z={z} s={s} v={v}: resid {resid:.3e} tol {tol:.3e}");
            per_regime[pick] += 1;
        }
    }
}
