//! Double-exponential quadrature for complex-valued integrands on (0, ∞).
//!
//! Two open rules — tanh-sinh on finite intervals and exp-sinh on
//! semi-infinite ones — plus [`integrate_halfline`], which splits at the
//! integrand's interior split points (the catalog integrands all carry the
//! removable 0/0 point at x = 1) and sums the pieces. Node/weight tables are
//! built once per level and shared; the rules never evaluate an endpoint,
//! and nodes whose weight underflows 1e−300 are dropped so log-singular
//! endpoints cannot produce 0·∞.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Hard cap on level doubling (the spec's default precision stops at 12).
pub const MAX_LEVEL_CAP: u32 = 13;

const WEIGHT_FLOOR: f64 = 1e-300;
/// Abscissa guard for exp-sinh: values outside are dropped before the
/// integrand sees them.
const X_MAX: f64 = 1e250;
const X_MIN: f64 = 1e-300;
/// Convergence scale floor: keeps the agreement test meaningful for
/// integrals that are legitimately ~0 without demanding absurd absolute
/// accuracy from tiny ones.
const SCALE_FLOOR: f64 = 1e-3;

/// A complex integrand of a real variable together with its interior split
/// points. The evaluator is never called at a split point or at 0.
pub struct Integrand {
    f: Box<dyn Fn(f64) -> Complex64 + Send + Sync>,
    splits: Vec<f64>,
}

impl Integrand {
    pub fn new(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static, splits: Vec<f64>) -> Self {
        let mut splits = splits;
        splits.retain(|s| s.is_finite() && *s > 0.0);
        splits.sort_by(|a, b| a.partial_cmp(b).unwrap());
        splits.dedup();
        Integrand {
            f: Box::new(f),
            splits,
        }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> Complex64 {
        (self.f)(x)
    }

    pub fn splits(&self) -> &[f64] {
        &self.splits
    }
}

/// Outcome of one rule application.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Best achieved agreement between successive levels (non-increasing as
    /// levels are added).
    pub est_error: f64,
    pub nodes: usize,
    pub level: u32,
    pub converged: bool,
}

impl QuadratureResult {
    fn merge(self, other: QuadratureResult) -> QuadratureResult {
        QuadratureResult {
            value: self.value + other.value,
            est_error: self.est_error + other.est_error,
            nodes: self.nodes + other.nodes,
            level: self.level.max(other.level),
            converged: self.converged && other.converged,
        }
    }
}

/// tanh-sinh node at positive abscissa t: x = tanh((π/2) sinh t) stored as
/// the distance d = 1 − x from the endpoint, with its weight.
#[derive(Clone, Copy)]
struct TsNode {
    d: f64,
    w: f64,
}

/// exp-sinh node: x = exp((π/2) sinh t) with weight x·(π/2)·cosh t.
#[derive(Clone, Copy)]
struct EsNode {
    x: f64,
    w: f64,
}

fn ts_node(t: f64) -> Option<TsNode> {
    let u = FRAC_PI_2 * t.sinh();
    let e2u = (-2.0 * u).exp();
    if e2u == 0.0 {
        return None;
    }
    let d = 2.0 * e2u / (1.0 + e2u);
    let w = FRAC_PI_2 * t.cosh() * (4.0 * e2u / ((1.0 + e2u) * (1.0 + e2u)));
    if w < WEIGHT_FLOOR {
        return None;
    }
    Some(TsNode { d, w })
}

fn es_node(t: f64) -> Option<EsNode> {
    let x = (FRAC_PI_2 * t.sinh()).exp();
    if !x.is_finite() || !(X_MIN..=X_MAX).contains(&x) {
        return None;
    }
    let w = x * FRAC_PI_2 * t.cosh();
    if !w.is_finite() || w < WEIGHT_FLOOR {
        return None;
    }
    Some(EsNode { x, w })
}

const TS_T_MAX: f64 = 6.2;
const ES_T_MAX: f64 = 6.9;

fn ts_tables() -> &'static Vec<Vec<TsNode>> {
    static TABLES: OnceLock<Vec<Vec<TsNode>>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut levels = Vec::new();
        // level 0: t = 1, 2, ... (the center t = 0 is handled explicitly)
        let mut lvl0 = Vec::new();
        let mut k = 1u32;
        while (k as f64) <= TS_T_MAX {
            if let Some(n) = ts_node(k as f64) {
                lvl0.push(n);
            }
            k += 1;
        }
        levels.push(lvl0);
        for level in 1..=MAX_LEVEL_CAP {
            let h = 0.5f64.powi(level as i32);
            let mut nodes = Vec::new();
            let mut j = 0u64;
            loop {
                let t = (2 * j + 1) as f64 * h;
                if t > TS_T_MAX {
                    break;
                }
                if let Some(n) = ts_node(t) {
                    nodes.push(n);
                } else if t > 1.0 {
                    break;
                }
                j += 1;
            }
            levels.push(nodes);
        }
        levels
    })
}

fn es_tables() -> &'static Vec<Vec<EsNode>> {
    static TABLES: OnceLock<Vec<Vec<EsNode>>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut levels = Vec::new();
        let mut lvl0 = Vec::new();
        let mut k = -(ES_T_MAX as i64);
        while (k as f64) <= ES_T_MAX {
            if let Some(n) = es_node(k as f64) {
                lvl0.push(n);
            }
            k += 1;
        }
        levels.push(lvl0);
        for level in 1..=MAX_LEVEL_CAP {
            let h = 0.5f64.powi(level as i32);
            let mut nodes = Vec::new();
            let mut j = 0i64;
            loop {
                let t = (2 * j + 1) as f64 * h;
                if t > ES_T_MAX {
                    break;
                }
                if let Some(n) = es_node(t) {
                    nodes.push(n);
                }
                if let Some(n) = es_node(-t) {
                    nodes.push(n);
                }
                j += 1;
            }
            levels.push(nodes);
        }
        levels
    })
}

fn check_finite(v: Complex64, x: f64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(format!("integrand at x = {x:e}")))
    }
}

struct LevelLoop {
    value: Complex64,
    est: f64,
    nodes: usize,
    level: u32,
    converged: bool,
}

fn run_levels(
    tol: f64,
    max_level: u32,
    mut level_sum: impl FnMut(u32) -> Result<(Complex64, usize)>,
) -> Result<LevelLoop> {
    let max_level = max_level.min(MAX_LEVEL_CAP);
    let (s0, n0) = level_sum(0)?;
    let mut integral = s0; // h = 1 at level 0
    let mut nodes = n0;
    let mut est = f64::INFINITY;
    let mut level = 0;
    let mut converged = false;
    for l in 1..=max_level {
        let h = 0.5f64.powi(l as i32);
        let (snew, nnew) = level_sum(l)?;
        let next = integral * 0.5 + snew * h;
        let raw = (next - integral).norm();
        integral = next;
        nodes += nnew;
        level = l;
        est = est.min(raw);
        let scale = integral.norm().max(SCALE_FLOOR);
        if l >= 2 && raw <= tol * scale {
            converged = true;
            break;
        }
    }
    Ok(LevelLoop {
        value: integral,
        est: if est.is_finite() { est } else { 0.0 },
        nodes,
        level,
        converged,
    })
}

/// Integrate f over (lo, hi) by the tanh-sinh rule, doubling the level until
/// two successive levels agree within tol (relative to the running value) or
/// `max_level` is reached. The rule is open: endpoints are never evaluated.
pub fn tanh_sinh(
    f: &Integrand,
    lo: f64,
    hi: f64,
    tol: f64,
    max_level: u32,
) -> Result<QuadratureResult> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("tanh_sinh: bad interval ({lo}, {hi})")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tanh_sinh: tol must be > 0".into()));
    }
    let mid = 0.5 * (lo + hi);
    let halfw = 0.5 * (hi - lo);
    let tables = ts_tables();
    let out = run_levels(tol, max_level, |level| {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut n = 0usize;
        if level == 0 {
            sum += FRAC_PI_2 * check_finite(f.eval(mid), mid)?;
            n += 1;
        }
        for node in &tables[level as usize] {
            let x_hi = hi - halfw * node.d;
            if x_hi > lo && x_hi < hi {
                sum += node.w * check_finite(f.eval(x_hi), x_hi)?;
                n += 1;
            }
            let x_lo = lo + halfw * node.d;
            if x_lo > lo && x_lo < hi && x_lo != x_hi {
                sum += node.w * check_finite(f.eval(x_lo), x_lo)?;
                n += 1;
            }
        }
        Ok((sum * halfw, n))
    })?;
    Ok(QuadratureResult {
        value: out.value,
        est_error: out.est,
        nodes: out.nodes,
        level: out.level,
        converged: out.converged,
    })
}

/// Integrate f over (lo, ∞) by the exp-sinh rule. The integrand must decay
/// integrably; nodes that would collapse onto `lo` in floating point are
/// skipped.
pub fn exp_sinh(f: &Integrand, lo: f64, tol: f64, max_level: u32) -> Result<QuadratureResult> {
    if !lo.is_finite() || lo < 0.0 {
        return Err(Error::Domain(format!("exp_sinh: bad lower endpoint {lo}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("exp_sinh: tol must be > 0".into()));
    }
    let tables = es_tables();
    let out = run_levels(tol, max_level, |level| {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut n = 0usize;
        for node in &tables[level as usize] {
            let x = lo + node.x;
            if x == lo || !x.is_finite() {
                continue;
            }
            sum += node.w * check_finite(f.eval(x), x)?;
            n += 1;
        }
        Ok((sum, n))
    })?;
    Ok(QuadratureResult {
        value: out.value,
        est_error: out.est,
        nodes: out.nodes,
        level: out.level,
        converged: out.converged,
    })
}

/// Integrate f over (0, ∞): tanh-sinh on each finite piece delimited by the
/// split points, exp-sinh past the last one. The reported est_error is the
/// sum of the component estimates.
pub fn integrate_halfline(f: &Integrand, tol: f64, max_level: u32) -> Result<QuadratureResult> {
    let splits = f.splits().to_vec();
    if splits.is_empty() {
        return exp_sinh(f, 0.0, tol, max_level);
    }
    let mut acc: Option<QuadratureResult> = None;
    let mut lo = 0.0f64;
    for &s in &splits {
        let piece = tanh_sinh(f, lo, s, tol, max_level)?;
        acc = Some(match acc {
            Some(a) => a.merge(piece),
            None => piece,
        });
        lo = s;
    }
    let last = exp_sinh(f, lo, tol, max_level)?;
    Ok(match acc {
        Some(a) => a.merge(last),
        None => last,
    })
}
