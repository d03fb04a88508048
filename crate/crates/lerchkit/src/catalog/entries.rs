//! The entry definitions: one per identity, each pairing the printed
//! integrand with the printed closed form.
//!
//! Integrands are written in cancellation-free form around the removable
//! point at x = 1: power differences become 2·e^{(n+m)g}·sinh((n−m)g) with
//! g = log x, and x^{2l} − 1 becomes expm1(2l·g), so double-exponential
//! nodes arbitrarily close to 1 stay accurate.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::params::ParamSet;
use super::{ClosedForm, Entry, SweepDim, ToleranceClass, Validation};
use crate::complex::{cpow_principal, near_integer, rpow};
use crate::quadrature::Integrand;
use crate::specfun::{
    gamma, glaisher, hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, polylog, polylog_sderiv,
    riemann_zeta, LerchArgs, Strategy,
};
use crate::{Budget, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn i() -> Complex64 {
    c(0.0, 1.0)
}

/// exp(w) − 1 without cancellation near w = 0.
fn cexpm1(w: Complex64) -> Complex64 {
    if w.norm() <= 0.1 {
        let mut term = w;
        let mut acc = w;
        for j in 2..=12 {
            term = term * w / j as f64;
            acc += term;
        }
        acc
    } else if w.im == 0.0 {
        c(w.re.exp_m1(), 0.0)
    } else {
        w.exp() - 1.0
    }
}

/// x^{2n} − x^{2m} = 2 e^{(n+m)g} sinh((n−m)g), g = log x. Only for |g| of
/// order one; the far tails go through [`pow_ratio`].
fn power_diff(g: Complex64, n: Complex64, m: Complex64) -> Complex64 {
    2.0 * ((n + m) * g).exp() * ((n - m) * g).sinh()
}

/// (x^{e1} − x^{e2}) / (x^{d} − 1) from g = log x, stable across the whole
/// half-line: sinh/expm1 forms kill the 0/0 cancellation near x = 1, and the
/// far tails are rearranged so no intermediate overflows before the value
/// itself would.
fn pow_ratio(g: f64, e1: Complex64, e2: Complex64, d: Complex64) -> Complex64 {
    let gc = c(g, 0.0);
    let half_diff = (e1 - e2) * 0.5 * gc;
    if g.abs() <= 1.0 {
        return 2.0 * ((e1 + e2) * 0.5 * gc).exp() * half_diff.sinh() / cexpm1(d * gc);
    }
    if g > 0.0 {
        // divide numerator and denominator by x^d
        let den = c(1.0, 0.0) - (-d * gc).exp();
        let num = if half_diff.re.abs() <= 350.0 {
            2.0 * (((e1 + e2) * 0.5 - d) * gc).exp() * half_diff.sinh()
        } else {
            ((e1 - d) * gc).exp() - ((e2 - d) * gc).exp()
        };
        num / den
    } else {
        let den = cexpm1(d * gc);
        let num = if half_diff.re.abs() <= 350.0 {
            2.0 * ((e1 + e2) * 0.5 * gc).exp() * half_diff.sinh()
        } else {
            (e1 * gc).exp() - (e2 * gc).exp()
        };
        num / den
    }
}

/// x^{e} / (x^{d} − 1) from g = log x, overflow-safe for large g.
fn pow_over(g: f64, e: Complex64, d: Complex64) -> Complex64 {
    let gc = c(g, 0.0);
    if g > 1.0 {
        ((e - d) * gc).exp() / (c(1.0, 0.0) - (-d * gc).exp())
    } else {
        (e * gc).exp() / cexpm1(d * gc)
    }
}

/// w^k with an exact path for integer k (so the k = 0 factor degenerates to
/// 1 even where w = 0).
fn wpow(w: Complex64, k: Complex64) -> Complex64 {
    if let Some(ki) = near_integer(k, 1e-12) {
        w.powi(ki as i32)
    } else {
        cpow_principal(w, k).unwrap_or(c(f64::NAN, f64::NAN))
    }
}

fn theta(t: Complex64, l: Complex64) -> Complex64 {
    (2.0 * PI * t + PI) / (2.0 * l)
}

/// e^{iπ(2t+1)/l}, the Lerch argument of the master family.
fn unit_arg(t: Complex64, l: Complex64) -> Complex64 {
    (i() * PI * (2.0 * t + 1.0) / l).exp()
}

/// v = 1 − i·l·log(a)/(2π).
fn v_of(l: Complex64, a: Complex64) -> Complex64 {
    c(1.0, 0.0) - i() * l * a.ln() / (2.0 * PI)
}

fn csc(z: Complex64) -> Complex64 {
    1.0 / z.sin()
}

fn cot(z: Complex64) -> Complex64 {
    z.cos() / z.sin()
}

/// Collects strategies and scaled error estimates from specfun calls.
struct Diag {
    strategies: Vec<Strategy>,
    est: f64,
}

impl Diag {
    fn new() -> Self {
        Diag {
            strategies: Vec::new(),
            est: 0.0,
        }
    }
    fn take(&mut self, r: crate::specfun::EvalResult, scale: f64) -> Complex64 {
        self.strategies.push(r.strategy);
        self.est += r.est_error * scale;
        r.value
    }
    fn done(self, value: Complex64) -> ClosedForm {
        ClosedForm {
            value,
            est_error: self.est + 8.0 * f64::EPSILON * value.norm(),
            strategies: self.strategies,
        }
    }
}

fn exact(value: Complex64) -> ClosedForm {
    ClosedForm {
        value,
        est_error: 8.0 * f64::EPSILON * value.norm(),
        strategies: Vec::new(),
    }
}

// ---------------------------------------------------------------- validation

fn ok() -> Validation {
    Validation {
        ok: true,
        diagnostic: String::new(),
    }
}

fn bad(msg: impl Into<String>) -> Validation {
    Validation {
        ok: false,
        diagnostic: msg.into(),
    }
}

fn strip(name: &str, t: Complex64, l: Complex64) -> Option<String> {
    if t.re <= -0.5 {
        Some(format!("Re({name}) <= -1/2"))
    } else if t.re >= l.re - 0.5 {
        Some(format!("Re({name}) >= Re(l) - 1/2"))
    } else {
        None
    }
}

fn check_l(l: Complex64) -> Option<String> {
    if l.norm() < 1e-9 {
        Some("l = 0".into())
    } else if l.re <= 0.0 {
        Some("Re(l) <= 0".into())
    } else {
        None
    }
}

fn check_scale_a(a: Complex64) -> Option<String> {
    if a.im == 0.0 && a.re <= 0.0 {
        Some("a on the cut (-inf, 0]".into())
    } else {
        None
    }
}

fn check_unit_arg(name: &str, t: Complex64, l: Complex64) -> Option<String> {
    if (unit_arg(t, l) - c(1.0, 0.0)).norm() <= 1e-9 {
        Some(format!("Lerch argument on pole (e^{{i pi (2{name}+1)/l}} = 1)"))
    } else {
        None
    }
}

fn check_lerch_v(v: Complex64) -> Option<String> {
    match near_integer(v, 1e-9) {
        Some(k) if k <= 0 => Some("Lerch v parameter on pole set".into()),
        _ => None,
    }
}

fn integer_k(k: Complex64, max: i64) -> std::result::Result<i64, String> {
    match near_integer(k, 1e-12) {
        Some(ki) if (0..=max).contains(&ki) => Ok(ki),
        Some(ki) => Err(format!("k = {ki} outside 0..={max}")),
        None => Err("k must be a non-negative integer (non-integer order on the unit circle is unsupported)".into()),
    }
}

fn master_family_validate(p: &ParamSet, with_k_a: bool) -> Validation {
    if let Some(d) = check_l(p.l) {
        return bad(d);
    }
    for (name, t) in [("n", p.n), ("m", p.m)] {
        if let Some(d) = check_unit_arg(name, t, p.l) {
            return bad(d);
        }
        if let Some(d) = strip(name, t, p.l) {
            return bad(d);
        }
    }
    if with_k_a {
        if let Err(d) = integer_k(p.k, 8) {
            return bad(d);
        }
        if let Some(d) = check_scale_a(p.a) {
            return bad(d);
        }
        if let Some(d) = check_lerch_v(v_of(p.l, p.a)) {
            return bad(d);
        }
    }
    ok()
}

fn trig_pole(name: &str, s: Complex64) -> Option<String> {
    if s.norm() < 1e-9 {
        Some(format!("trigonometric pole: {name}"))
    } else {
        None
    }
}

// ------------------------------------------------------------------- entries

fn ps(assign: &[(&str, Complex64)]) -> ParamSet {
    let mut p = ParamSet::default();
    for (k, v) in assign {
        p.set(k, *v).unwrap();
    }
    p
}

fn master_validate(p: &ParamSet) -> Validation {
    master_family_validate(p, true)
}

fn master_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l, k, la) = (p.n, p.m, p.l, p.k, p.a.ln());
    Integrand::new(
        move |x| {
            let g = x.ln();
            pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l) * wpow(la + c(2.0 * g, 0.0), k)
        },
        vec![1.0],
    )
}

fn master_closed(p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    let v = v_of(p.l, p.a);
    let s = -p.k;
    let zn = unit_arg(p.n, p.l);
    let zm = unit_arg(p.m, p.l);
    let mut d = Diag::new();
    let phin = d.take(lerch_phi(&LerchArgs::new(zn, s, v), budget)?, 1.0);
    let phim = d.take(lerch_phi(&LerchArgs::new(zm, s, v), budget)?, 1.0);
    let coef = i()
        * cpow_principal(c(2.0, 0.0), p.k)?
        * cpow_principal(c(PI, 0.0), p.k + 1.0)?
        * cpow_principal(i() / p.l, p.k)?
        / p.l;
    let value = coef * (zn * phin - zm * phim);
    d.est *= coef.norm();
    Ok(d.done(value))
}

fn log_csc2_validate(p: &ParamSet) -> Validation {
    let v = master_family_validate(p, false);
    if !v.ok {
        return v;
    }
    for (name, t) in [("n", p.n), ("m", p.m)] {
        if let Some(d) = trig_pole(&format!("sin((2 pi {name} + pi)/(2l))"), theta(t, p.l).sin()) {
            return bad(d);
        }
    }
    ok()
}

fn log_csc2_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l) = (p.n, p.m, p.l);
    Integrand::new(
        move |x| {
            let g = x.ln();
            2.0 * g * pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l)
        },
        vec![1.0],
    )
}

fn log_csc2_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    let cn = csc(theta(p.n, p.l));
    let cm = csc(theta(p.m, p.l));
    Ok(exact(PI * PI * (cn * cn - cm * cm) / (2.0 * p.l * p.l)))
}

fn grad32444_validate(p: &ParamSet) -> Validation {
    let v = master_family_validate(p, false);
    if !v.ok {
        return v;
    }
    for (name, t) in [("n", p.n), ("m", p.m)] {
        if let Some(d) = trig_pole(&format!("sin((2 pi {name} + pi)/(2l))"), theta(t, p.l).sin()) {
            return bad(d);
        }
    }
    ok()
}

fn grad32444_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l) = (p.n, p.m, p.l);
    Integrand::new(
        move |x| {
            let g = x.ln();
            pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l)
        },
        vec![1.0],
    )
}

fn grad32444_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    Ok(exact(
        PI * (cot(theta(p.m, p.l)) - cot(theta(p.n, p.l))) / (2.0 * p.l),
    ))
}

fn grad42351_validate(p: &ParamSet) -> Validation {
    if p.n.re <= 1.0 {
        return bad("Re(n) <= 1");
    }
    if let Some(d) = trig_pole("cos(pi/(2n))", (PI / (2.0 * p.n)).cos()) {
        return bad(d);
    }
    ok()
}

fn grad42351_integrand(p: &ParamSet) -> Integrand {
    let n = p.n;
    Integrand::new(
        move |x| {
            let g = x.ln();
            g * pow_ratio(g, n - 1.0, n - 2.0, 2.0 * n)
        },
        vec![1.0],
    )
}

fn grad42351_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let t = (PI / (2.0 * p.n)).tan();
    Ok(exact(-PI * PI * t * t / (4.0 * p.n * p.n)))
}

fn grad42352_validate(p: &ParamSet) -> Validation {
    if p.m.re <= 0.0 {
        return bad("Re(m) <= 0");
    }
    if p.m.re >= 2.0 * p.n.re - 2.0 {
        return bad("Re(m) >= 2 Re(n) - 2 (diverges at infinity)");
    }
    for (nm, ss) in [
        ("sin(pi m/(2n))", (PI * p.m / (2.0 * p.n)).sin()),
        ("sin(pi (m+2)/(2n))", (PI * (p.m + 2.0) / (2.0 * p.n)).sin()),
    ] {
        if let Some(d) = trig_pole(nm, ss) {
            return bad(d);
        }
    }
    ok()
}

fn grad42352_integrand(p: &ParamSet) -> Integrand {
    let (n, m) = (p.n, p.m);
    Integrand::new(
        move |x| {
            let g = x.ln();
            g * pow_ratio(g, m + 1.0, m - 1.0, 2.0 * n)
        },
        vec![1.0],
    )
}

fn grad42352_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let ca = csc(PI * p.m / (2.0 * p.n));
    let cb = csc(PI * (p.m + 2.0) / (2.0 * p.n));
    Ok(exact(-PI * PI * (ca * ca - cb * cb) / (4.0 * p.n * p.n)))
}

fn grad42353_validate(p: &ParamSet) -> Validation {
    if p.n.re <= 2.0 {
        return bad("Re(n) <= 2");
    }
    if let Some(d) = trig_pole("cos(pi/n)", (PI / p.n).cos()) {
        return bad(d);
    }
    ok()
}

fn grad42353_integrand(p: &ParamSet) -> Integrand {
    let n = p.n;
    Integrand::new(
        move |x| {
            let g = x.ln();
            g * pow_ratio(g, n - 1.0, n - 3.0, 2.0 * n)
        },
        vec![1.0],
    )
}

fn grad42353_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let t = (PI / p.n).tan();
    Ok(exact(-PI * PI * t * t / (4.0 * p.n * p.n)))
}

fn polylog_form_validate(p: &ParamSet) -> Validation {
    let v = master_family_validate(p, false);
    if !v.ok {
        return v;
    }
    if let Err(d) = integer_k(p.k, 8) {
        return bad(d);
    }
    ok()
}

fn polylog_form_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l, k) = (p.n, p.m, p.l, p.k);
    Integrand::new(
        move |x| {
            let g = x.ln();
            wpow(c(g, 0.0), k) * pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l)
        },
        vec![1.0],
    )
}

fn polylog_form_closed(p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    let s = -p.k;
    let mut d = Diag::new();
    let lim = d.take(polylog(s, unit_arg(p.m, p.l), budget)?, 1.0);
    let lin = d.take(polylog(s, unit_arg(p.n, p.l), budget)?, 1.0);
    let coef = cpow_principal(c(PI, 0.0), p.k + 1.0)? * cpow_principal(i() / p.l, p.k - 1.0)?
        / (p.l * p.l);
    d.est *= coef.norm();
    Ok(d.done(coef * (lim - lin)))
}

fn four_power_validate(p: &ParamSet) -> Validation {
    if let Some(d) = check_l(p.l) {
        return bad(d);
    }
    for (name, t) in [("m", p.m), ("n", p.n), ("p", p.p), ("q", p.q)] {
        if let Some(d) = strip(name, t, p.l) {
            return bad(d);
        }
    }
    if (p.m - p.n - p.p + p.q).norm() > 1e-12 {
        return bad("m - n - p + q != 0 (non-integrable singularity at x = 1)");
    }
    let num = (PI * (p.n - p.p) / p.l).cos() - (PI * (p.n + p.p + 1.0) / p.l).cos();
    let den = (PI * (p.m - p.q) / p.l).cos() - (PI * (p.m + p.q + 1.0) / p.l).cos();
    if num.norm() < 1e-9 || den.norm() < 1e-9 {
        return bad("cosine difference vanishes (log argument on pole)");
    }
    ok()
}

fn four_power_integrand(p: &ParamSet) -> Integrand {
    let (m, n, pp, q, l) = (p.m, p.n, p.p, p.q, p.l);
    // Balanced numerator x^{2m} − x^{2n} − x^{2p} + x^{2q}
    //   = 4 e^{(m+q)g} sinh(((m−q)+(n−p))g/2) sinh(((m−q)−(n−p))g/2);
    // pairs are split apart in the tails where no cancellation remains.
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            if g.abs() <= 1.0 {
                let am = (m - q) * gc;
                let bn = (n - pp) * gc;
                let num = 4.0 * ((m + q) * gc).exp()
                    * ((am + bn) * 0.5).sinh()
                    * ((am - bn) * 0.5).sinh();
                num / (cexpm1(2.0 * l * gc) * gc)
            } else {
                (pow_ratio(g, 2.0 * m, 2.0 * n, 2.0 * l)
                    + pow_ratio(g, 2.0 * q, 2.0 * pp, 2.0 * l))
                    / gc
            }
        },
        vec![1.0],
    )
}

fn four_power_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    if (p.m == p.n && p.p == p.q) || (p.m == p.p && p.n == p.q) {
        return Ok(exact(c(0.0, 0.0)));
    }
    let num = (PI * (p.n - p.p) / p.l).cos() - (PI * (p.n + p.p + 1.0) / p.l).cos();
    let den = (PI * (p.m - p.q) / p.l).cos() - (PI * (p.m + p.q + 1.0) / p.l).cos();
    let phase = (-i() * PI * (p.m - p.n - p.p + p.q) / p.l).exp();
    Ok(exact((num * phase / den).ln()))
}

fn row7_validate(p: &ParamSet) -> Validation {
    fixed_params_validate(p, &ps(&[("n", c(0.5, 0.0)), ("m", c(1.0 / 3.0, 0.0)), ("l", c(2.0, 0.0))]))
}

fn fixed_params_validate(p: &ParamSet, want: &ParamSet) -> Validation {
    for name in super::params::PARAM_NAMES {
        let got = p.get(name).unwrap();
        let exp = want.get(name).unwrap();
        if (got - exp).norm() > 1e-12 {
            return bad(format!(
                "fixed entry: parameter {name} is not adjustable"
            ));
        }
    }
    ok()
}

fn row7_integrand(_: &ParamSet) -> Integrand {
    // (x − x^{2/3}) log(log x)/(x⁴ − 1); log(log x) picks up iπ on (0,1).
    Integrand::new(
        move |x| {
            let g = x.ln();
            pow_ratio(g, c(1.0, 0.0), c(2.0 / 3.0, 0.0), c(4.0, 0.0)) * c(g, 0.0).ln()
        },
        vec![1.0],
    )
}

fn row7_closed(_: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    let z = cpow_principal(c(-1.0, 0.0), c(5.0 / 6.0, 0.0))?;
    let mut d = Diag::new();
    let li0p = d.take(polylog_sderiv(c(0.0, 0.0), z, budget)?, 1.0);
    let rt3 = 3.0f64.sqrt();
    let pref = PI / (8.0 * (c(rt3, 0.0) + c(2.0, -1.0)));
    let value = pref
        * (4.0 * (c(1.0, 2.0) + i() * rt3) * li0p
            + (c(-rt3, 0.0) + c(2.0, 1.0)) * PI
            + (c(4.0, 0.0) + 4.0 * i() * rt3) * (PI / 2.0).ln());
    d.est *= pref.norm() * 4.0 * (c(1.0, 2.0) + i() * rt3).norm();
    Ok(d.done(value))
}

fn k2_validate(p: &ParamSet) -> Validation {
    log_csc2_validate(p)
}

fn k2_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l) = (p.n, p.m, p.l);
    Integrand::new(
        move |x| {
            let g = x.ln();
            g * g * pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l)
        },
        vec![1.0],
    )
}

fn k2_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    let (n, m, l) = (p.n, p.m, p.l);
    let cm = csc(theta(m, l));
    let cn = csc(theta(n, l));
    let bracket = 6.0 * (PI * (m - n) / l).sin() - (PI * (3.0 * m - n + 1.0) / l).sin()
        - (PI * (3.0 * m + n + 2.0) / l).sin()
        + (PI * (-m + 3.0 * n + 1.0) / l).sin()
        + (PI * (m + 3.0 * n + 2.0) / l).sin();
    let value = -(PI * PI * PI) * cm * cm * cm * cn * cn * cn * bracket / (32.0 * l * l * l);
    Ok(exact(value))
}

fn log_denom_validate(p: &ParamSet) -> Validation {
    let v = master_family_validate(p, false);
    if !v.ok {
        return v;
    }
    if p.alpha.im.abs() > 1e-12 || p.alpha.re <= 0.0 {
        return bad("alpha must be real and positive");
    }
    if let Some(d) = check_lerch_v(p.alpha * p.l / PI + 1.0) {
        return bad(d);
    }
    ok()
}

fn log_denom_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l, al) = (p.n, p.m, p.l, p.alpha);
    // log x (x^{2n}−x^{2m})/((x^{2l}−1)(α²+log²x))
    //   + i α (x^{2m}−x^{2n})/((x^{2l}−1)(α²+log²x))
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let ratio = pow_ratio(g, 2.0 * n, 2.0 * m, 2.0 * l);
            (gc - i() * al) * ratio / (al * al + gc * gc)
        },
        vec![1.0],
    )
}

fn log_denom_closed(p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    if p.n == p.m {
        return Ok(exact(c(0.0, 0.0)));
    }
    let v = p.alpha * p.l / PI + 1.0;
    let one = c(1.0, 0.0);
    let zn = unit_arg(p.n, p.l);
    let zm = unit_arg(p.m, p.l);
    let mut d = Diag::new();
    let phin = d.take(lerch_phi(&LerchArgs::new(zn, one, v), budget)?, 1.0);
    let phim = d.take(lerch_phi(&LerchArgs::new(zm, one, v), budget)?, 1.0);
    let pref = (i() * PI / p.l).exp();
    let value = pref
        * ((2.0 * i() * PI * p.n / p.l).exp() * phin - (2.0 * i() * PI * p.m / p.l).exp() * phim);
    d.est *= pref.norm();
    Ok(d.done(value))
}

// ---- §15 example rows (fixed parameters, real-constant closed forms) ----

pub(super) fn ex1_params() -> ParamSet {
    ps(&[
        ("n", c(0.5, 0.0)),
        ("m", c(1.0 / 3.0, 0.0)),
        ("l", c(1.5, 0.0)),
        ("alpha", c(PI, 0.0)),
    ])
}

pub(super) fn ex2_params() -> ParamSet {
    ps(&[
        ("n", c(0.5, 0.0)),
        ("m", c(1.0 / 3.0, 0.0)),
        ("l", c(2.0, 0.0)),
        ("alpha", c(PI / 2.0, 0.0)),
    ])
}

pub(super) fn ex3_params() -> ParamSet {
    ps(&[
        ("n", c(0.5, 0.0)),
        ("m", c(0.75, 0.0)),
        ("l", c(2.0, 0.0)),
        ("alpha", c(PI / 2.0, 0.0)),
    ])
}

fn ex1_log_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            gc * pow_ratio(g, c(1.0, 0.0), c(2.0 / 3.0, 0.0), c(3.0, 0.0))
                / (gc * gc + PI * PI)
        },
        vec![1.0],
    )
}

fn ex1_log_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let s18 = (PI / 18.0).sin();
    Ok(exact(c(
        (4.0 + 3.0f64.sqrt() * PI - 8.0 * (PI / 9.0).cos()
            + (2.0 * (1.0 + s18) / (9.0 * (2.0 - 2.0 * s18))).ln())
            / 4.0,
        0.0,
    )))
}

fn ex1_plain_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            pow_ratio(g, c(2.0 / 3.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)) / (gc * gc + PI * PI)
        },
        vec![1.0],
    )
}

fn ex1_plain_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let s18 = (PI / 18.0).sin();
    Ok(exact(c(
        (PI + 8.0 * (PI / 9.0).sin() + 2.0 * 3.0f64.sqrt() * (s18.atanh() - 2.0)) / (4.0 * PI),
        0.0,
    )))
}

fn ex2_log_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            gc * pow_ratio(g, c(1.0, 0.0), c(2.0 / 3.0, 0.0), c(4.0, 0.0))
                / (4.0 * gc * gc + PI * PI)
        },
        vec![1.0],
    )
}

fn ex2_log_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    Ok(exact(c(
        (-PI + 24.0 * 2.0f64.ln() - 6.0 * 3.0f64.sqrt() * (2.0 + 3.0f64.sqrt()).ln()) / 96.0,
        0.0,
    )))
}

fn ex2_plain_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            pow_ratio(g, c(2.0 / 3.0, 0.0), c(1.0, 0.0), c(4.0, 0.0))
                / (4.0 * gc * gc + PI * PI)
        },
        vec![1.0],
    )
}

fn ex2_plain_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    Ok(exact(c(
        (3.0f64.sqrt() * PI - 6.0 * 2.0f64.acosh()) / (48.0 * PI),
        0.0,
    )))
}

fn ex3_plain_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            pow_ratio(g, c(1.5, 0.0), c(1.0, 0.0), c(4.0, 0.0)) / (4.0 * gc * gc + PI * PI)
        },
        vec![1.0],
    )
}

fn ex3_plain_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    Ok(exact(c(
        -(PI - 4.0 * (2.0 + 2.0f64.sqrt()).ln()) / (16.0 * 2.0f64.sqrt() * PI),
        0.0,
    )))
}

fn ex3_log_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            gc * pow_ratio(g, c(1.0, 0.0), c(1.5, 0.0), c(4.0, 0.0))
                / (gc * gc + PI * PI / 4.0)
        },
        vec![1.0],
    )
}

fn ex3_log_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let rt2 = 2.0f64.sqrt();
    Ok(exact(c(
        2.0f64.ln() - (2.0 + rt2).ln() / (2.0 * rt2) - (1.0 / (1.0 + rt2)).atan() / rt2,
        0.0,
    )))
}

// ---- §16 product-log theorems ----

fn product_pair_validate(p: &ParamSet) -> Validation {
    master_family_validate(p, true)
}

fn product_pair_integrand(p: &ParamSet) -> Integrand {
    let (n, m, l, k, la) = (p.n, p.m, p.l, p.k, p.a.ln());
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let sum = pow_over(g, 2.0 * m, 2.0 * l) + pow_over(g, 2.0 * n, 2.0 * l);
            gc * sum * wpow(la + 2.0 * gc, k)
        },
        vec![1.0],
    )
}

fn product_pair_term(
    t: Complex64,
    p: &ParamSet,
    v: Complex64,
    la: Complex64,
    d: &mut Diag,
    budget: &Budget,
) -> Result<Complex64> {
    let z = unit_arg(t, p.l);
    let p1 = d.take(lerch_phi(&LerchArgs::new(z, -p.k - 1.0, v), budget)?, 2.0 * PI);
    let p0 = d.take(
        lerch_phi(&LerchArgs::new(z, -p.k, v), budget)?,
        (p.l * la).norm(),
    );
    Ok((2.0 * i() * PI * t / p.l).exp() * (2.0 * PI * p1 + i() * p.l * la * p0))
}

fn product_pair_closed(p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    let la = p.a.ln();
    let v = v_of(p.l, p.a);
    let mut d = Diag::new();
    let tm = product_pair_term(p.m, p, v, la, &mut d, budget)?;
    let tn = product_pair_term(p.n, p, v, la, &mut d, budget)?;
    let pref = -(cpow_principal(c(2.0, 0.0), p.k - 1.0)?
        * cpow_principal(c(PI, 0.0), p.k + 1.0)?
        * (i() * PI / p.l).exp()
        * cpow_principal(i() / p.l, p.k)?)
        / (p.l * p.l);
    d.est *= pref.norm();
    Ok(d.done(pref * (tm + tn)))
}

fn product_single_validate(p: &ParamSet) -> Validation {
    if let Some(d) = check_l(p.l) {
        return bad(d);
    }
    if let Some(d) = strip("n", p.n, p.l) {
        return bad(d);
    }
    if let Some(d) = check_unit_arg("n", p.n, p.l) {
        return bad(d);
    }
    if let Err(d) = integer_k(p.k, 8) {
        return bad(d);
    }
    if let Some(d) = check_scale_a(p.a) {
        return bad(d);
    }
    if let Some(d) = check_lerch_v(v_of(p.l, p.a)) {
        return bad(d);
    }
    ok()
}

fn product_single_integrand(p: &ParamSet) -> Integrand {
    let (n, l, k, la) = (p.n, p.l, p.k, p.a.ln());
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            gc * pow_over(g, 2.0 * n, 2.0 * l) * wpow(la + 2.0 * gc, k)
        },
        vec![1.0],
    )
}

fn product_single_closed(p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
    let la = p.a.ln();
    let v = v_of(p.l, p.a);
    let z = unit_arg(p.n, p.l);
    let mut d = Diag::new();
    let p1 = d.take(lerch_phi(&LerchArgs::new(z, -p.k - 1.0, v), budget)?, 2.0 * PI);
    let p0 = d.take(
        lerch_phi(&LerchArgs::new(z, -p.k, v), budget)?,
        (p.l * la).norm(),
    );
    let pref = -(cpow_principal(c(2.0, 0.0), p.k - 1.0)?
        * cpow_principal(c(PI, 0.0), p.k + 1.0)?
        * cpow_principal(i() / p.l, p.k)?
        * z)
        / (p.l * p.l);
    d.est *= pref.norm();
    Ok(d.done(pref * (2.0 * PI * p1 + i() * p.l * la * p0)))
}

fn hurwitz_pair_validate(p: &ParamSet) -> Validation {
    if let Err(d) = integer_k(p.k, 8) {
        return bad(d);
    }
    if let Some(d) = check_scale_a(p.a) {
        return bad(d);
    }
    ok()
}

fn hurwitz_pair_integrand(p: &ParamSet) -> Integrand {
    let (k, la) = (p.k, p.a.ln());
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            gc * pow_over(g, c(1.0, 0.0), c(4.0, 0.0)) * wpow(la + 2.0 * gc, k)
        },
        vec![1.0],
    )
}

fn hurwitz_pair_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let la = p.a.ln();
    let va = (PI - i() * la) / (2.0 * PI);
    let vb = c(1.0, 0.0) - i() * la / (2.0 * PI);
    let mut d = Diag::new();
    let za1 = d.take(hurwitz_zeta(-p.k - 1.0, va)?, 2.0 * PI);
    let zb1 = d.take(hurwitz_zeta(-p.k - 1.0, vb)?, 2.0 * PI);
    let za0 = d.take(hurwitz_zeta(-p.k, va)?, la.norm());
    let zb0 = d.take(hurwitz_zeta(-p.k, vb)?, la.norm());
    let pref = cpow_principal(i(), p.k)?
        * cpow_principal(c(2.0, 0.0), p.k - 2.0)?
        * cpow_principal(c(PI, 0.0), p.k + 1.0)?;
    d.est *= pref.norm();
    Ok(d.done(pref * (2.0 * PI * (za1 - zb1) + i() * la * (za0 - zb0))))
}

fn zeta_deriv_validate(p: &ParamSet) -> Validation {
    if p.k.im.abs() > 1e-12 {
        return bad("k must be real for the order-derivative family");
    }
    if p.k.re <= -0.95 {
        return bad("Re(k) <= -0.95 (zeta(k+2) pole at k = -1)");
    }
    if p.k.re > 8.0 {
        return bad("k > 8");
    }
    ok()
}

fn zeta_deriv_integrand(p: &ParamSet) -> Integrand {
    let k = p.k;
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let lx2 = 2.0 * gc; // log(x²)
            gc * lx2.ln() * wpow(lx2, k) * pow_over(g, c(1.0, 0.0), c(4.0, 0.0))
        },
        vec![1.0],
    )
}

fn zeta_deriv_closed(p: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let k = p.k.re;
    let mut d = Diag::new();
    let zp = d.take(
        hurwitz_zeta_sderiv(c(-k - 1.0, 0.0), c(1.0, 0.0))?,
        (4.0 * PI).powf(k + 2.0) + (2.0 * PI).powf(k + 2.0),
    );
    let zk2 = d.take(riemann_zeta(c(k + 2.0, 0.0))?, 40.0);
    let g = gamma(c(k + 2.0, 0.0))?;
    let bracket = ((4.0 * PI).powf(k + 2.0) - (2.0 * PI).powf(k + 2.0)) * zp
        + zk2
            * (i() * PI * (2.0f64.powf(k + 2.0) - 1.0)
                + c(2.0f64.powf(k + 3.0) * (2.0 * PI).ln() - 2.0 * PI.ln(), 0.0))
            * (PI * k / 2.0).cos()
            * g;
    let pref = 2.0f64.powf(-k - 4.0) * Complex64::from_polar(1.0, PI * k / 2.0);
    d.est *= pref.norm();
    Ok(d.done(pref * bracket))
}

// ---- §16 example rows ----

fn row13_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let lx2 = 2.0 * gc;
            gc * lx2 * lx2.ln() * pow_over(g, c(1.0, 0.0), c(4.0, 0.0))
        },
        vec![1.0],
    )
}

fn row13_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let mut d = Diag::new();
    let z3 = d.take(riemann_zeta(c(3.0, 0.0))?, 7.0 * PI / 16.0);
    Ok(d.done(-7.0 / 16.0 * i() * PI * z3))
}

fn row14_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let lx2 = 2.0 * gc;
            gc * lx2.ln() * pow_over(g, c(1.0, 0.0), c(4.0, 0.0)) / lx2
        },
        vec![1.0],
    )
}

fn row14_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    Ok(exact(PI / 16.0 * (c(PI, 0.0) - 2.0 * i() * 2.0f64.ln())))
}

fn row15_integrand(_: &ParamSet) -> Integrand {
    Integrand::new(
        move |x| {
            let g = x.ln();
            let gc = c(g, 0.0);
            let lx2 = 2.0 * gc;
            gc * lx2.ln() * pow_over(g, c(1.0, 0.0), c(4.0, 0.0))
        },
        vec![1.0],
    )
}

fn row15_closed(_: &ParamSet, _: &Budget) -> Result<ClosedForm> {
    let a = glaisher();
    let log_term = 2.0f64.ln() / 3.0 + PI.ln() / 4.0 - 3.0 * a.ln();
    let value = PI * PI / 32.0 * (c(8.0 * log_term + 2.0, PI));
    Ok(ClosedForm {
        value,
        est_error: 1e-9 * value.norm(),
        strategies: vec![Strategy::OrderDerivative],
    })
}

// ------------------------------------------------------------------ registry

fn dim(name: &'static str, lo: f64, hi: f64) -> SweepDim {
    SweepDim {
        name,
        lo,
        hi,
        integer: false,
        clamp_below_l: false,
    }
}

fn dim_clamped(name: &'static str, lo: f64, hi: f64) -> SweepDim {
    SweepDim {
        name,
        lo,
        hi,
        integer: false,
        clamp_below_l: true,
    }
}

fn dim_int(name: &'static str, lo: f64, hi: f64) -> SweepDim {
    SweepDim {
        name,
        lo,
        hi,
        integer: true,
        clamp_below_l: false,
    }
}

pub(super) fn build_entries() -> Vec<Entry> {
    let one = c(1.0, 0.0);
    let two = c(2.0, 0.0);
    let three = c(3.0, 0.0);
    vec![
        Entry {
            id: "master",
            anchor: "§5 Eq. (9)",
            hypothesis: "printed: all m,n,a,k,l in C; enforced: -1/2 < Re(n),Re(m) < Re(l)-1/2, integer k in 0..=8, a off (-inf,0]",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "(x^2n - x^2m) log^k(a x^2) / (x^2l - 1)",
            display_closed: "i 2^k pi^(k+1) (i/l)^k / l * [e^(i pi(2n+1)/l) Phi(e^(i pi(2n+1)/l), -k, v) - (n -> m)], v = 1 - i l log(a)/(2 pi)",
            defaults: vec![ps(&[("n", one), ("m", two), ("l", three), ("k", one), ("a", one)])],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
                dim_int("k", 0.0, 3.0),
                dim("a", 0.5, 2.0),
            ],
            validate: master_validate,
            integrand: master_integrand,
            closed: master_closed,
        },
        Entry {
            id: "log-csc2",
            anchor: "§6 Eq. (10)",
            hypothesis: "printed: Re(m) < Re(l), Re(n) < Re(l); enforced: convergence strips as for the master entry",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "log(x^2) (x^2n - x^2m) / (x^2l - 1)",
            display_closed: "pi^2 (csc^2((2 pi n + pi)/(2l)) - csc^2((2 pi m + pi)/(2l))) / (2 l^2)",
            defaults: vec![ps(&[("n", one), ("m", two), ("l", three)])],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
            ],
            validate: log_csc2_validate,
            integrand: log_csc2_integrand,
            closed: log_csc2_closed,
        },
        Entry {
            id: "grad-3.244.4",
            anchor: "§7",
            hypothesis: "printed: Re(m) < Re(l), Re(n) < Re(l); enforced: convergence strips as for the master entry",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "(x^2n - x^2m) / (x^2l - 1)",
            display_closed: "pi (cot((2 pi m + pi)/(2l)) - cot((2 pi n + pi)/(2l))) / (2l)",
            defaults: vec![ps(&[("n", one), ("m", two), ("l", three)])],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
            ],
            validate: grad32444_validate,
            integrand: grad32444_integrand,
            closed: grad32444_closed,
        },
        Entry {
            id: "grad-4.235.1",
            anchor: "§8 Eq. (12)",
            hypothesis: "printed and enforced: Re(n) > 1",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "(x - 1) x^(n-2) log(x) / (x^2n - 1)",
            display_closed: "-pi^2 tan^2(pi/(2n)) / (4 n^2)",
            defaults: vec![
                ps(&[("n", three)]),
                ps(&[("n", c(4.0, 0.0))]),
                ps(&[("n", c(5.0, 0.0))]),
            ],
            sweep_box: vec![dim("n", 1.2, 6.0)],
            validate: grad42351_validate,
            integrand: grad42351_integrand,
            closed: grad42351_closed,
        },
        Entry {
            id: "grad-4.235.2",
            anchor: "§9",
            hypothesis: "printed: Re(n) > Re(m) > 0; enforced: Re(m) > 0 and Re(m) < 2 Re(n) - 2 (true convergence strip)",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "(x^2 - 1) x^(m-1) log(x) / (x^2n - 1)",
            display_closed: "-pi^2 (csc^2(pi m/(2n)) - csc^2(pi (m+2)/(2n))) / (4 n^2)",
            defaults: vec![
                ps(&[("n", three), ("m", one)]),
                ps(&[("n", three), ("m", two)]),
                ps(&[("n", c(4.0, 0.0)), ("m", one)]),
                ps(&[("n", c(4.0, 0.0)), ("m", two)]),
                ps(&[("n", c(5.0, 0.0)), ("m", one)]),
                ps(&[("n", c(5.0, 0.0)), ("m", two)]),
            ],
            sweep_box: vec![dim("n", 1.6, 6.0), dim("m", 0.1, 2.5)],
            validate: grad42352_validate,
            integrand: grad42352_integrand,
            closed: grad42352_closed,
        },
        Entry {
            id: "grad-4.235.3",
            anchor: "§10",
            hypothesis: "printed: Re(n) > 2 and Im(n) > 2; enforced: Re(n) > 2 (the printed Im constraint contradicts the real test values; convergence strip used instead)",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "(x^2 - 1) x^(n-3) log(x) / (x^2n - 1)",
            display_closed: "-pi^2 tan^2(pi/n) / (4 n^2)",
            defaults: vec![
                ps(&[("n", three)]),
                ps(&[("n", c(4.0, 0.0))]),
                ps(&[("n", c(5.0, 0.0))]),
            ],
            sweep_box: vec![dim("n", 2.2, 6.0)],
            validate: grad42353_validate,
            integrand: grad42353_integrand,
            closed: grad42353_closed,
        },
        Entry {
            id: "polylog-form",
            anchor: "§11 Eq. (13)",
            hypothesis: "a = 1 specialization; enforced: convergence strips, integer k in 0..=8",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "log^k(x) (x^2n - x^2m) / (x^2l - 1)",
            display_closed: "pi^(k+1) (i/l)^(k-1) / l^2 * (Li_-k(e^(i pi(2m+1)/l)) - Li_-k(e^(i pi(2n+1)/l)))",
            defaults: vec![ps(&[("n", one), ("m", two), ("l", three), ("k", one)])],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
                dim_int("k", 0.0, 3.0),
            ],
            validate: polylog_form_validate,
            integrand: polylog_form_integrand,
            closed: polylog_form_closed,
        },
        Entry {
            id: "four-power",
            anchor: "§12 Eq. (14)",
            hypothesis: "printed: all m,n,p,q,l in C; enforced: convergence strips and m - n - p + q = 0 (otherwise the integral diverges at x = 1)",
            tolerance_class: ToleranceClass::BranchOffset,
            difference_form: false,
            fixed: false,
            display_integrand: "(x^2m - x^2n - x^2p + x^2q) / ((x^2l - 1) log(x))",
            display_closed: "log((cos(pi(n-p)/l) - cos(pi(n+p+1)/l)) e^(-i pi(m-n-p+q)/l) / (cos(pi(m-q)/l) - cos(pi(m+q+1)/l)))",
            defaults: vec![ps(&[
                ("m", one),
                ("n", two),
                ("p", three),
                ("q", c(4.0, 0.0)),
                ("l", c(5.0, 0.0)),
            ])],
            sweep_box: vec![],
            validate: four_power_validate,
            integrand: four_power_integrand,
            closed: four_power_closed,
        },
        Entry {
            id: "table-row-7",
            anchor: "§13",
            hypothesis: "fixed instance n=1/2, m=1/3, l=2, a=1; Li'_0 read as d/ds Li_s at s=0",
            tolerance_class: ToleranceClass::OrderDerivative,
            difference_form: false,
            fixed: true,
            display_integrand: "(x - x^(2/3)) log(log(x)) / (x^4 - 1)",
            display_closed: "pi/(8(sqrt3+2-i)) * (4((1+2i)+i sqrt3) Li'_0((-1)^(5/6)) + (-sqrt3+2+i) pi + (4+4i sqrt3) log(pi/2))",
            defaults: vec![ps(&[("n", c(0.5, 0.0)), ("m", c(1.0 / 3.0, 0.0)), ("l", two)])],
            sweep_box: vec![],
            validate: row7_validate,
            integrand: row7_integrand,
            closed: row7_closed,
        },
        Entry {
            id: "k2-trig",
            anchor: "§14",
            hypothesis: "k = 2, a = 1 specialization; enforced: convergence strips",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "log^2(x) (x^2n - x^2m) / (x^2l - 1)",
            display_closed: "-pi^3 csc^3(th_m) csc^3(th_n) [6 sin(pi(m-n)/l) - sin(pi(3m-n+1)/l) - sin(pi(3m+n+2)/l) + sin(pi(3n-m+1)/l) + sin(pi(m+3n+2)/l)] / (32 l^3)",
            defaults: vec![ps(&[("n", one), ("m", two), ("l", three)])],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
            ],
            validate: k2_validate,
            integrand: k2_integrand,
            closed: k2_closed,
        },
        Entry {
            id: "log-denom",
            anchor: "§15 Eq. (17)",
            hypothesis: "printed: all m,n,l in C; enforced: convergence strips, alpha real > 0",
            tolerance_class: ToleranceClass::Classical,
            difference_form: true,
            fixed: false,
            display_integrand: "[log(x)(x^2n - x^2m) + i alpha (x^2m - x^2n)] / ((x^2l - 1)(alpha^2 + log^2 x))",
            display_closed: "e^(i pi/l) (e^(2 i pi n/l) Phi(e^(i pi(2n+1)/l), 1, alpha l/pi + 1) - (n -> m))",
            defaults: vec![ex2_params()],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_clamped("m", 0.0, 3.4),
                dim("alpha", 0.5, 3.0),
            ],
            validate: log_denom_validate,
            integrand: log_denom_integrand,
            closed: log_denom_closed,
        },
        Entry {
            id: "table-row-ex1-log",
            anchor: "§15 Example 1",
            hypothesis: "fixed instance alpha=pi, l=3/2, n=1/2, m=1/3 (real part of the log-denominator identity)",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(x - x^(2/3)) log(x) / ((x^3 - 1)(log^2 x + pi^2))",
            display_closed: "(4 + sqrt3 pi - 8 cos(pi/9) + log(2(1+sin(pi/18)) / (9(2-2 sin(pi/18))))) / 4",
            defaults: vec![ex1_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex1_params()),
            integrand: ex1_log_integrand,
            closed: ex1_log_closed,
        },
        Entry {
            id: "table-row-ex1-plain",
            anchor: "§15 Example 1",
            hypothesis: "fixed instance alpha=pi, l=3/2, n=1/2, m=1/3 (imaginary part of the log-denominator identity)",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(x^(2/3) - x) / ((x^3 - 1)(log^2 x + pi^2))",
            display_closed: "(pi + 8 sin(pi/9) + 2 sqrt3 (atanh(sin(pi/18)) - 2)) / (4 pi)",
            defaults: vec![ex1_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex1_params()),
            integrand: ex1_plain_integrand,
            closed: ex1_plain_closed,
        },
        Entry {
            id: "table-row-ex2-log",
            anchor: "§15 Example 2",
            hypothesis: "fixed instance alpha=pi/2, l=2, n=1/2, m=1/3",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(x - x^(2/3)) log(x) / ((x^4 - 1)(4 log^2 x + pi^2))",
            display_closed: "(-pi + 24 log 2 - 6 sqrt3 log(2 + sqrt3)) / 96",
            defaults: vec![ex2_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex2_params()),
            integrand: ex2_log_integrand,
            closed: ex2_log_closed,
        },
        Entry {
            id: "table-row-ex2-plain",
            anchor: "§15 Example 2",
            hypothesis: "fixed instance alpha=pi/2, l=2, n=1/2, m=1/3",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(x^(2/3) - x) / ((x^4 - 1)(4 log^2 x + pi^2))",
            display_closed: "(sqrt3 pi - 6 acosh(2)) / (48 pi)",
            defaults: vec![ex2_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex2_params()),
            integrand: ex2_plain_integrand,
            closed: ex2_plain_closed,
        },
        Entry {
            id: "table-row-ex3-plain",
            anchor: "§15 Example 3",
            hypothesis: "fixed instance alpha=pi/2, l=2, n=1/2, m=3/4",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(sqrt(x) - 1) x / ((x^4 - 1)(4 log^2 x + pi^2))",
            display_closed: "-(pi - 4 log(2 + sqrt2)) / (16 sqrt2 pi)",
            defaults: vec![ex3_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex3_params()),
            integrand: ex3_plain_integrand,
            closed: ex3_plain_closed,
        },
        Entry {
            id: "ex3-log",
            anchor: "§15 Example 3",
            hypothesis: "fixed instance alpha=pi/2, l=2, n=1/2, m=3/4 (second identity of the example; not a table row)",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: true,
            display_integrand: "(x - x^(3/2)) log(x) / ((x^4 - 1)(log^2 x + pi^2/4))",
            display_closed: "log 2 - log(2 + sqrt2)/(2 sqrt2) - atan(1/(1 + sqrt2))/sqrt2",
            defaults: vec![ex3_params()],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ex3_params()),
            integrand: ex3_log_integrand,
            closed: ex3_log_closed,
        },
        Entry {
            id: "product-log-pair",
            anchor: "§16 Theorem 1",
            hypothesis: "printed: all k,m,n,l in C; enforced: convergence strips, integer k in 0..=8, a off (-inf,0]",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "log(x) (x^2m + x^2n) log^k(a x^2) / (x^2l - 1)",
            display_closed: "-2^(k-1) pi^(k+1) e^(i pi/l) (i/l)^k / l^2 * [e^(2 i pi m/l)(2 pi Phi(z_m,-k-1,v) + i l log(a) Phi(z_m,-k,v)) + (m -> n)]",
            defaults: vec![
                ps(&[("m", one), ("n", two), ("l", three), ("k", one), ("a", two)]),
                ps(&[("m", one), ("n", two), ("l", three), ("k", one), ("a", one)]),
            ],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("m", 0.0, 3.4),
                dim_clamped("n", 0.0, 3.4),
                dim_int("k", 0.0, 3.0),
                dim("a", 0.5, 2.0),
            ],
            validate: product_pair_validate,
            integrand: product_pair_integrand,
            closed: product_pair_closed,
        },
        Entry {
            id: "product-log-single",
            anchor: "§16 Theorem 2",
            hypothesis: "printed: all k,n,l in C; enforced: convergence strip for n, integer k in 0..=8, a off (-inf,0]",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "x^2n log(x) log^k(a x^2) / (x^2l - 1)",
            display_closed: "-2^(k-1) pi^(k+1) (i/l)^k e^(i pi(2n+1)/l) / l^2 * (2 pi Phi(z_n,-k-1,v) + i l log(a) Phi(z_n,-k,v))",
            defaults: vec![
                ps(&[("n", one), ("l", three), ("k", one), ("a", two)]),
                ps(&[("n", two), ("l", three), ("k", two), ("a", c(0.5, 0.0))]),
            ],
            sweep_box: vec![
                dim("l", 1.5, 4.0),
                dim_clamped("n", 0.0, 3.4),
                dim_int("k", 0.0, 3.0),
                dim("a", 0.5, 2.0),
            ],
            validate: product_single_validate,
            integrand: product_single_integrand,
            closed: product_single_closed,
        },
        Entry {
            id: "hurwitz-pair",
            anchor: "§16 Theorem 3",
            hypothesis: "n=1/2, l=2 specialization in Hurwitz zeta form; enforced: integer k in 0..=8, a off (-inf,0]",
            tolerance_class: ToleranceClass::Classical,
            difference_form: false,
            fixed: false,
            display_integrand: "x log(x) log^k(a x^2) / (x^4 - 1)",
            display_closed: "i^k 2^(k-2) pi^(k+1) [2 pi zeta(-k-1,(pi - i log a)/(2 pi)) - 2 pi zeta(-k-1,1 - i log(a)/(2 pi)) + i log(a)(zeta(-k,(pi - i log a)/(2 pi)) - zeta(-k,1 - i log(a)/(2 pi)))]",
            defaults: vec![
                ps(&[("k", one), ("a", two)]),
                ps(&[("k", c(0.0, 0.0)), ("a", c(std::f64::consts::E, 0.0))]),
            ],
            sweep_box: vec![dim_int("k", 0.0, 3.0), dim("a", 0.5, 2.5)],
            validate: hurwitz_pair_validate,
            integrand: hurwitz_pair_integrand,
            closed: hurwitz_pair_closed,
        },
        Entry {
            id: "zeta-deriv",
            anchor: "§16 Theorem 4",
            hypothesis: "a = 1 order-derivative family; enforced: real k in (-0.95, 8]",
            tolerance_class: ToleranceClass::OrderDerivative,
            difference_form: false,
            fixed: false,
            display_integrand: "x log(x) log(log(x^2)) log^k(x^2) / (x^4 - 1)",
            display_closed: "2^(-k-4) e^(i pi k/2) [((4 pi)^(k+2) - (2 pi)^(k+2)) zeta'(-k-1) + zeta(k+2)(i pi(2^(k+2)-1) + 2^(k+3) log(2 pi) - 2 log pi) cos(pi k/2) Gamma(k+2)]",
            defaults: vec![
                ps(&[("k", c(0.0, 0.0))]),
                ps(&[("k", one)]),
                ps(&[("k", two)]),
                ps(&[("k", c(0.5, 0.0))]),
            ],
            sweep_box: vec![dim("k", -0.4, 3.0)],
            validate: zeta_deriv_validate,
            integrand: zeta_deriv_integrand,
            closed: zeta_deriv_closed,
        },
        Entry {
            id: "table-row-13",
            anchor: "§16 Example 1",
            hypothesis: "k = 1 instance of the order-derivative family",
            tolerance_class: ToleranceClass::BranchOffset,
            difference_form: false,
            fixed: true,
            display_integrand: "x log(x) log(x^2) log(log(x^2)) / (x^4 - 1)",
            display_closed: "-(7/16) i pi zeta(3)",
            defaults: vec![ps(&[("k", one)])],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ps(&[("k", c(1.0, 0.0))])),
            integrand: row13_integrand,
            closed: row13_closed,
        },
        Entry {
            id: "table-row-14",
            anchor: "§16 Example 2",
            hypothesis: "k = -1 limit of the order-derivative family; the printed integral itself diverges at x = 1 (log^-1 factor), so the quadrature side cannot converge — the closed form is the k -> -1 limit value",
            tolerance_class: ToleranceClass::BranchOffset,
            difference_form: false,
            fixed: true,
            display_integrand: "x log(x) log(log(x^2)) / ((x^4 - 1) log(x^2))",
            display_closed: "pi (pi - 2 i log 2) / 16",
            defaults: vec![ps(&[("k", c(-1.0, 0.0))])],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ps(&[("k", c(-1.0, 0.0))])),
            integrand: row14_integrand,
            closed: row14_closed,
        },
        Entry {
            id: "table-row-15",
            anchor: "§16 Example 3",
            hypothesis: "k = 0 instance of the order-derivative family; closed form through the Glaisher constant",
            tolerance_class: ToleranceClass::OrderDerivative,
            difference_form: false,
            fixed: true,
            display_integrand: "x log(x) log(log(x^2)) / (x^4 - 1)",
            display_closed: "pi^2 (8 log(2^(1/3) pi^(1/4) / A^3) + 2 + i pi) / 32",
            defaults: vec![ps(&[("k", c(0.0, 0.0))])],
            sweep_box: vec![],
            validate: |p| fixed_params_validate(p, &ps(&[("k", c(0.0, 0.0))])),
            integrand: row15_integrand,
            closed: row15_closed,
        },
    ]
}
