//! The identity catalog: every entry pairs a half-line integrand with its
//! closed form, a parameter-domain predicate, the source anchor tag, and the
//! instantiations used by the report table.
//!
//! Entry ids and anchors are a stable CLI/report contract — renaming an id
//! is a breaking change.

mod entries;
pub mod params;

use num_complex::Complex64;
use serde::Serialize;
use std::sync::OnceLock;

pub use params::ParamSet;

use crate::quadrature::Integrand;
use crate::specfun::Strategy;
use crate::{Budget, Error, Result};

/// Verification tolerance family of an entry: classical real closed forms,
/// branch-offset complex ones, and closed forms built on order-derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToleranceClass {
    Classical,
    BranchOffset,
    OrderDerivative,
}

impl ToleranceClass {
    /// Default relative tolerance for pass/fail.
    pub fn rel_tol(self) -> f64 {
        match self {
            ToleranceClass::Classical => 1e-9,
            ToleranceClass::BranchOffset => 1e-8,
            ToleranceClass::OrderDerivative => 1e-7,
        }
    }

    /// Default quadrature tolerance: order-derivative and branch-offset
    /// entries stack extra numerical layers, so their oracle runs looser.
    pub fn quad_tol(self) -> f64 {
        match self {
            ToleranceClass::Classical => 1e-10,
            _ => 1e-8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ToleranceClass::Classical => "classical",
            ToleranceClass::BranchOffset => "branch-offset",
            ToleranceClass::OrderDerivative => "order-derivative",
        }
    }
}

/// Outcome of the parameter-domain predicate; the diagnostic names the
/// violated condition.
#[derive(Clone, Debug)]
pub struct Validation {
    pub ok: bool,
    pub diagnostic: String,
}

/// A closed-form value with the specfun diagnostics behind it.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub value: Complex64,
    pub est_error: f64,
    pub strategies: Vec<Strategy>,
}

/// One axis of an entry's default random-sweep box (real intervals;
/// exponent axes of the master family are clamped below Re(l) − 0.6).
#[derive(Clone, Copy, Debug)]
pub struct SweepDim {
    pub name: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub integer: bool,
    pub clamp_below_l: bool,
}

pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    /// The source's printed hypothesis next to what the predicate enforces.
    pub hypothesis: &'static str,
    pub tolerance_class: ToleranceClass,
    /// Antisymmetric under n ↔ m (closed form negates, m = n gives 0).
    pub difference_form: bool,
    /// Fixed-instance entry: parameters are pinned, sweeps are disabled.
    pub fixed: bool,
    pub display_integrand: &'static str,
    pub display_closed: &'static str,
    pub defaults: Vec<ParamSet>,
    pub sweep_box: Vec<SweepDim>,
    validate: fn(&ParamSet) -> Validation,
    integrand: fn(&ParamSet) -> Integrand,
    closed: fn(&ParamSet, &Budget) -> Result<ClosedForm>,
}

impl Entry {
    pub fn validate_params(&self, p: &ParamSet) -> Validation {
        (self.validate)(p)
    }

    /// The integrand over (0, ∞) with its split list (always containing 1).
    pub fn make_integrand(&self, p: &ParamSet) -> Result<Integrand> {
        let v = self.validate_params(p);
        if !v.ok {
            return Err(Error::Domain(format!("{}: {}", self.id, v.diagnostic)));
        }
        Ok((self.integrand)(p))
    }

    /// The entry's right-hand side, exactly as printed, with diagnostics.
    pub fn closed_form_diag(&self, p: &ParamSet, budget: &Budget) -> Result<ClosedForm> {
        let v = self.validate_params(p);
        if !v.ok {
            return Err(Error::Domain(format!("{}: {}", self.id, v.diagnostic)));
        }
        (self.closed)(p, budget)
    }
}

/// Deterministic entry order: master, the derivation chain, then the fixed
/// example rows.
pub fn entries() -> &'static [Entry] {
    static ENTRIES: OnceLock<Vec<Entry>> = OnceLock::new();
    ENTRIES.get_or_init(entries::build_entries)
}

pub fn entry(id: &str) -> Result<&'static Entry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// (id, anchor, tolerance class) for every entry, in registry order.
pub fn list_entries() -> Vec<(&'static str, &'static str, ToleranceClass)> {
    entries()
        .iter()
        .map(|e| (e.id, e.anchor, e.tolerance_class))
        .collect()
}

/// Closed form of an entry at the given parameters.
pub fn closed_form(id: &str, p: &ParamSet) -> Result<Complex64> {
    Ok(entry(id)?.closed_form_diag(p, &Budget::default())?.value)
}

/// Pointwise integrand evaluation. x must be positive and off the split
/// points (the removable 0/0 point at x = 1 in particular).
pub fn integrand_at(id: &str, p: &ParamSet, x: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("integrand needs x > 0, got {x}")));
    }
    let e = entry(id)?;
    let f = e.make_integrand(p)?;
    if f.splits().iter().any(|s| *s == x) {
        return Err(Error::Domain(format!(
            "x = {x} is a split point of `{id}` (0/0 there)"
        )));
    }
    Ok(f.eval(x))
}

/// Parameter-domain predicate with the violated condition named.
pub fn validate_params(id: &str, p: &ParamSet) -> Result<Validation> {
    Ok(entry(id)?.validate_params(p))
}

/// The fifteen report-table rows, in source order.
pub const TABLE_ROWS: [&str; 15] = [
    "polylog-form",
    "grad-3.244.4",
    "log-csc2",
    "grad-4.235.1",
    "grad-4.235.2",
    "four-power",
    "table-row-7",
    "table-row-ex1-log",
    "table-row-ex1-plain",
    "table-row-ex2-log",
    "table-row-ex2-plain",
    "table-row-ex3-plain",
    "table-row-13",
    "table-row-14",
    "table-row-15",
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pset(assign: &[(&str, f64)]) -> ParamSet {
        let mut p = ParamSet::default();
        for (k, v) in assign {
            p.set(k, c(*v, 0.0)).unwrap();
        }
        p
    }

    #[test]
    fn registry_shape() {
        let list = list_entries();
        assert!(list.len() >= 22, "{} entries", list.len());
        let ids: Vec<&str> = list.iter().map(|e| e.0).collect();
        for id in ["master", "grad-3.244.4", "grad-4.235.1", "table-row-7", "table-row-ex2-log"] {
            assert!(ids.contains(&id), "missing {id}");
        }
        // ids are unique and every table row resolves
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in TABLE_ROWS {
            assert!(entry(id).is_ok(), "table row {id}");
        }
        // anchors pinned by the contract
        let by_id = |id: &str| list.iter().find(|e| e.0 == id).unwrap().1;
        assert_eq!(by_id("grad-3.244.4"), "§7");
        assert!(by_id("master").contains("Eq. (9)"));
        assert!(entry("no-such-entry").is_err());
    }

    #[test]
    fn defaults_satisfy_their_predicates() {
        for e in entries() {
            for (i, p) in e.defaults.iter().enumerate() {
                let v = e.validate_params(p);
                assert!(v.ok, "{} default {i}: {}", e.id, v.diagnostic);
            }
        }
    }

    #[test]
    fn master_integrand_pointwise() {
        // k = 0, a = 1, (n, m, l) = (1, 2, 3) at x = 2: (4 − 16)/(64 − 1).
        let p = pset(&[("n", 1.0), ("m", 2.0), ("l", 3.0), ("k", 0.0), ("a", 1.0)]);
        let got = integrand_at("master", &p, 2.0).unwrap();
        assert!((got - c(-12.0 / 63.0, 0.0)).norm() < 1e-14, "{got}");

        // n = m: identically zero
        let p = pset(&[("n", 1.0), ("m", 1.0), ("l", 3.0), ("k", 1.0), ("a", 1.0)]);
        for x in [0.3, 0.9999999, 2.5, 17.0] {
            assert_eq!(integrand_at("master", &p, x).unwrap(), c(0.0, 0.0));
        }

        // x = 1 is rejected as a split point
        assert!(integrand_at("master", &p, 1.0).is_err());
        assert!(integrand_at("master", &p, 0.0).is_err());
    }

    #[test]
    fn row7_integrand_branch_offset_at_half() {
        // log(log x) on (0,1) is log|log x| + iπ: the imaginary part is
        // exactly π times the real cofactor.
        let e = entry("table-row-7").unwrap();
        let f = (e.integrand)(&e.defaults[0]);
        let x = 0.5f64;
        let got = f.eval(x);
        let cofactor = (x - x.powf(2.0 / 3.0)) / (x.powi(4) - 1.0);
        assert!((got.im - PI * cofactor).abs() < 1e-14, "{got}");
        assert!((got.re - cofactor * (-x.ln()).ln()).abs() < 1e-14);
    }

    #[test]
    fn validate_diagnostics() {
        let p = pset(&[("n", 1.0), ("m", 2.0), ("l", 3.0), ("k", 1.0), ("a", 1.0)]);
        assert!(validate_params("master", &p).unwrap().ok);

        let p = pset(&[("n", 5.0), ("m", 1.0), ("l", 2.0), ("k", 1.0), ("a", 1.0)]);
        let v = validate_params("master", &p).unwrap();
        assert!(!v.ok);
        assert!(v.diagnostic.contains("Re(n) >= Re(l) - 1/2"), "{}", v.diagnostic);

        // e^{iπ(2n+1)/l} = 1 at n = 2.5, l = 3
        let p = pset(&[("n", 2.5), ("m", 1.0), ("l", 3.0), ("k", 1.0), ("a", 1.0)]);
        let v = validate_params("master", &p).unwrap();
        assert!(!v.ok);
        assert!(v.diagnostic.contains("Lerch argument on pole"), "{}", v.diagnostic);

        assert!(validate_params("nope", &p).is_err());

        // four-power balance requirement
        let p = pset(&[("m", 1.0), ("n", 2.0), ("p", 3.0), ("q", 4.5), ("l", 6.0)]);
        let v = validate_params("four-power", &p).unwrap();
        assert!(!v.ok && v.diagnostic.contains("m - n - p + q"), "{}", v.diagnostic);

        // fixed entries refuse parameter changes
        let mut p = entry("table-row-7").unwrap().defaults[0];
        p.set("n", c(0.9, 0.0)).unwrap();
        let v = validate_params("table-row-7", &p).unwrap();
        assert!(!v.ok && v.diagnostic.contains("fixed entry"));
    }

    #[test]
    fn closed_form_reference_values() {
        let budget = Budget::default();
        // grad-3.244.4 at (1,2,3): π(cot(5π/6) − cot(π/2))/6 = −π√3/6
        let p = pset(&[("n", 1.0), ("m", 2.0), ("l", 3.0)]);
        let got = closed_form("grad-3.244.4", &p).unwrap();
        assert!((got - c(-PI * 3.0f64.sqrt() / 6.0, 0.0)).norm() < 1e-14, "{got}");

        // grad-4.235.1 at n = 3: −π² tan²(π/6)/36
        let p = pset(&[("n", 3.0)]);
        let got = closed_form("grad-4.235.1", &p).unwrap();
        let want = -PI * PI * (PI / 6.0).tan().powi(2) / 36.0;
        assert!((got - c(want, 0.0)).norm() < 1e-14);

        // master at (1,2,3,1,1) equals −π²/6 (30-digit oracle −1.6449340668482264)
        let p = pset(&[("n", 1.0), ("m", 2.0), ("l", 3.0), ("k", 1.0), ("a", 1.0)]);
        let e = entry("master").unwrap();
        let got = e.closed_form_diag(&p, &budget).unwrap();
        assert!(
            (got.value - c(-PI * PI / 6.0, 0.0)).norm() < 1e-12,
            "{}",
            got.value
        );
        assert!(got.strategies.contains(&Strategy::ApostolBernoulli));

        // degeneracy short-circuit: m = n gives exactly zero
        let p = pset(&[("n", 1.0), ("m", 1.0), ("l", 3.0), ("k", 1.0), ("a", 1.0)]);
        assert_eq!(closed_form("master", &p).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn antisymmetry_of_difference_forms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let budget = Budget::default();
        for e in entries().iter().filter(|e| e.difference_form) {
            let mut done = 0;
            let mut tries = 0;
            while done < 100 && tries < 4000 {
                tries += 1;
                let mut p = e.defaults[0];
                let l = rng.gen_range(1.5..4.0);
                p.set("l", c(l, 0.0)).unwrap();
                p.set("n", c(rng.gen_range(0.0..l - 0.6), 0.0)).unwrap();
                p.set("m", c(rng.gen_range(0.0..l - 0.6), 0.0)).unwrap();
                if e.id == "log-denom" {
                    p.set("alpha", c(rng.gen_range(0.5..3.0), 0.0)).unwrap();
                }
                if e.id == "master" || e.id == "polylog-form" {
                    p.set("k", c(rng.gen_range(0..4) as f64, 0.0)).unwrap();
                }
                if !e.validate_params(&p).ok {
                    continue;
                }
                let mut swapped = p;
                swapped.set("n", p.m).unwrap();
                swapped.set("m", p.n).unwrap();
                if !e.validate_params(&swapped).ok {
                    continue;
                }
                let a = match e.closed_form_diag(&p, &budget) {
                    Ok(a) => a,
                    Err(_) => continue,
                };
                let b = e.closed_form_diag(&swapped, &budget).unwrap();
                let scale = a.value.norm().max(1e-300);
                assert!(
                    (a.value + b.value).norm() <= 1e-12 * scale + a.est_error + b.est_error,
                    "{}: {} vs swapped {}",
                    e.id,
                    a.value,
                    b.value
                );
                done += 1;
            }
            assert!(done >= 100, "{}: only {done} samples", e.id);
        }
    }

    #[test]
    fn four_power_pair_swap_negates() {
        let budget = Budget::default();
        let p = pset(&[("m", 1.0), ("n", 2.0), ("p", 3.0), ("q", 4.0), ("l", 5.0)]);
        let mut sw = p;
        sw.set("m", p.n).unwrap();
        sw.set("n", p.m).unwrap();
        sw.set("p", p.q).unwrap();
        sw.set("q", p.p).unwrap();
        let e = entry("four-power").unwrap();
        let a = e.closed_form_diag(&p, &budget).unwrap().value;
        let b = e.closed_form_diag(&sw, &budget).unwrap().value;
        assert!((a + b).norm() < 1e-12 * a.norm().max(1.0), "{a} vs {b}");
        // degenerate multiset: zero exactly
        let p0 = pset(&[("m", 1.0), ("n", 1.0), ("p", 2.0), ("q", 2.0), ("l", 5.0)]);
        assert_eq!(e.closed_form_diag(&p0, &budget).unwrap().value, c(0.0, 0.0));
    }

    #[test]
    fn reduction_chain_master_specializations() {
        // The derivation steps: §7 is master at k=0, a=1; §6 at k=1, a=1;
        // §11 is master(a=1)/2^k; §14 is master(k=2, a=1)/4 — all through
        // specfun only, no quadrature.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let budget = Budget::default();
        let e_master = entry("master").unwrap();
        let mut done = 0;
        while done < 40 {
            let l = rng.gen_range(1.5..4.0);
            let n = rng.gen_range(0.0..l - 0.6);
            let m = rng.gen_range(0.0..l - 0.6);
            let base = pset(&[("n", n), ("m", m), ("l", l), ("a", 1.0)]);
            if (n - m).abs() < 1e-3 {
                continue;
            }
            let mut p0 = base;
            p0.set("k", c(0.0, 0.0)).unwrap();
            if !e_master.validate_params(&p0).ok {
                continue;
            }
            done += 1;

            let m0 = e_master.closed_form_diag(&p0, &budget).unwrap();
            let g = closed_form("grad-3.244.4", &base).unwrap();
            assert!(
                (m0.value - g).norm() <= 1e-10 * g.norm().max(1.0) + m0.est_error,
                "§7 chain at n={n} m={m} l={l}: {} vs {g}",
                m0.value
            );

            let mut p1 = base;
            p1.set("k", c(1.0, 0.0)).unwrap();
            let m1 = e_master.closed_form_diag(&p1, &budget).unwrap();
            let s6 = closed_form("log-csc2", &base).unwrap();
            assert!(
                (m1.value - s6).norm() <= 1e-10 * s6.norm().max(1.0) + m1.est_error,
                "§6 chain: {} vs {s6}",
                m1.value
            );

            let mut p2 = base;
            p2.set("k", c(2.0, 0.0)).unwrap();
            let m2 = e_master.closed_form_diag(&p2, &budget).unwrap();
            let s14 = closed_form("k2-trig", &base).unwrap();
            assert!(
                (m2.value / 4.0 - s14).norm() <= 1e-10 * s14.norm().max(1.0) + m2.est_error,
                "§14 chain: {} vs {s14}",
                m2.value / 4.0
            );

            for k in 0..=3 {
                let mut pk = base;
                pk.set("k", c(k as f64, 0.0)).unwrap();
                let mk = e_master.closed_form_diag(&pk, &budget).unwrap();
                let s11 = closed_form("polylog-form", &pk).unwrap();
                let scaled = mk.value / 2.0f64.powi(k);
                assert!(
                    (scaled - s11).norm() <= 1e-10 * s11.norm().max(1.0) + mk.est_error,
                    "§11 chain k={k}: {scaled} vs {s11}"
                );
            }
        }
    }

    #[test]
    fn table_rows_match_their_parent_theorems() {
        // Rows 4–5 are the §6 csc² form under the printed substitutions;
        // rows 8–12 are real/imaginary parts of the §15 identity; rows 13
        // and 15 are the order-derivative family at k = 1 and 0.
        let budget = Budget::default();

        for n in [3.0, 4.0, 5.0] {
            let sub = pset(&[("n", (n - 2.0) / 2.0), ("m", (n - 1.0) / 2.0), ("l", n)]);
            let parent = -0.5 * closed_form("log-csc2", &sub).unwrap();
            let row = closed_form("grad-4.235.1", &pset(&[("n", n)])).unwrap();
            assert!((parent - row).norm() <= 1e-10 * row.norm().max(1e-3), "4.235.1 n={n}");

            let sub = pset(&[("n", (n - 3.0) / 2.0), ("m", (n - 1.0) / 2.0), ("l", n)]);
            let parent = -0.5 * closed_form("log-csc2", &sub).unwrap();
            let row = closed_form("grad-4.235.3", &pset(&[("n", n)])).unwrap();
            assert!((parent - row).norm() <= 1e-10 * row.norm().max(1e-3), "4.235.3 n={n}");

            for m in [1.0, 2.0] {
                let sub = pset(&[("n", (m - 1.0) / 2.0), ("m", (m + 1.0) / 2.0), ("l", n)]);
                let parent = -0.5 * closed_form("log-csc2", &sub).unwrap();
                let row = closed_form("grad-4.235.2", &pset(&[("n", n), ("m", m)])).unwrap();
                assert!(
                    (parent - row).norm() <= 1e-10 * row.norm().max(1e-3),
                    "4.235.2 n={n} m={m}"
                );
            }
        }

        // §15 examples against the full complex identity. With
        // F = closed_form(log-denom), diff = x^{2n} − x^{2m}:
        //   Re F = ∫ diff·log x/denom,  Im F = −α ∫ diff/denom.
        let e15 = entry("log-denom").unwrap();

        let f1 = e15.closed_form_diag(&super::entries::ex1_params(), &budget).unwrap();
        let r = closed_form("table-row-ex1-log", &entry("table-row-ex1-log").unwrap().defaults[0]).unwrap();
        assert!((f1.value.re - r.re).abs() <= 1e-10 + f1.est_error, "ex1-log");
        let r = closed_form("table-row-ex1-plain", &entry("table-row-ex1-plain").unwrap().defaults[0]).unwrap();
        assert!((f1.value.im / PI - r.re).abs() <= 1e-10 + f1.est_error, "ex1-plain");

        let f2 = e15.closed_form_diag(&super::entries::ex2_params(), &budget).unwrap();
        let r = closed_form("table-row-ex2-log", &entry("table-row-ex2-log").unwrap().defaults[0]).unwrap();
        assert!((f2.value.re / 4.0 - r.re).abs() <= 1e-10 + f2.est_error, "ex2-log");
        let r = closed_form("table-row-ex2-plain", &entry("table-row-ex2-plain").unwrap().defaults[0]).unwrap();
        assert!(
            (f2.value.im / (4.0 * (PI / 2.0)) - r.re).abs() <= 1e-10 + f2.est_error,
            "ex2-plain"
        );

        let f3 = e15.closed_form_diag(&super::entries::ex3_params(), &budget).unwrap();
        let r = closed_form("table-row-ex3-plain", &entry("table-row-ex3-plain").unwrap().defaults[0]).unwrap();
        assert!(
            (f3.value.im / (4.0 * (PI / 2.0)) - r.re).abs() <= 1e-10 + f3.est_error,
            "ex3-plain"
        );
        let r = closed_form("ex3-log", &entry("ex3-log").unwrap().defaults[0]).unwrap();
        assert!((f3.value.re - r.re).abs() <= 1e-10 + f3.est_error, "ex3-log");

        // §16 example rows against the zeta-derivative family.
        let zd = entry("zeta-deriv").unwrap();
        let fam1 = zd.closed_form_diag(&pset(&[("k", 1.0)]), &budget).unwrap();
        let row13 = closed_form("table-row-13", &entry("table-row-13").unwrap().defaults[0]).unwrap();
        assert!((fam1.value - row13).norm() <= 1e-10 * row13.norm() + fam1.est_error, "row 13");
        let fam0 = zd.closed_form_diag(&pset(&[("k", 0.0)]), &budget).unwrap();
        let row15 = closed_form("table-row-15", &entry("table-row-15").unwrap().defaults[0]).unwrap();
        assert!(
            (fam0.value - row15).norm() <= 1e-8 * row15.norm() + fam0.est_error,
            "row 15: {} vs {row15}",
            fam0.value
        );
    }
}
