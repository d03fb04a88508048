//! Report rendering: text, json, csv. The json form of a report list is a
//! bare array of flat objects; the CLI wraps it in a versioned envelope.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{self, TABLE_ROWS};
use crate::complex::fmt_complex;

use super::{SweepSummary, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (text|json|csv)")),
        }
    }
}

/// Render a report list. json is the bare array (`[]` when empty).
pub fn render_report(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(reports).expect("reports serialize"),
        Format::Csv => render_csv(reports),
        Format::Text => render_text(reports),
    }
}

/// Versioned envelope used by the CLI for json output.
pub fn render_json_envelope(
    reports: &[VerificationReport],
    summary: Option<&SweepSummary>,
) -> String {
    #[derive(Serialize)]
    struct Envelope<'a> {
        schema: u32,
        reports: &'a [VerificationReport],
        #[serde(skip_serializing_if = "Option::is_none")]
        summary: Option<&'a SweepSummary>,
    }
    serde_json::to_string(&Envelope {
        schema: 1,
        reports,
        summary,
    })
    .expect("envelope serializes")
}

fn render_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str(
        "entry_id,verdict,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,\
         converged,est_error,nodes,level,rhs_diag,wall_time,params\n",
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},\"{}\"",
            r.entry_id,
            r.verdict.name(),
            r.lhs.re,
            r.lhs.im,
            r.rhs.re,
            r.rhs.im,
            r.abs_residual,
            r.rel_residual,
            r.lhs_diag.converged,
            r.lhs_diag.est_error,
            r.lhs_diag.nodes,
            r.lhs_diag.level,
            r.rhs_diag.join("|"),
            r.wall_time,
            r.params.display(),
        );
    }
    out
}

fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<22} {:<28} {:>13} {:>13} {}",
        "entry", "lhs (quadrature)", "abs resid", "rel resid", "verdict"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<22} {:<28} {:>13.3e} {:>13.3e} {}",
            r.entry_id,
            fmt_complex_short(r.lhs),
            r.abs_residual,
            r.rel_residual,
            r.verdict.name()
        );
        let _ = writeln!(out, "    params: {}", r.params.display());
        let _ = writeln!(
            out,
            "    rhs = {} [{}]; quad: converged={} est={:.2e} nodes={} level={}",
            fmt_complex(r.rhs),
            r.rhs_diag.join(","),
            r.lhs_diag.converged,
            r.lhs_diag.est_error,
            r.lhs_diag.nodes,
            r.lhs_diag.level
        );
    }
    out
}

fn fmt_complex_short(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else if z.im < 0.0 {
        format!("{:.9}{:.9}i", z.re, z.im)
    } else {
        format!("{:.9}+{:.9}i", z.re, z.im)
    }
}

/// Text layout of the full table run: the fifteen rows in source order,
/// with a residual column appended.
pub fn render_table_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:<58} {:>13} {:>13}  {}",
        "row", "f(x)", "rel resid", "abs resid", "verdict"
    );
    for (i, r) in reports.iter().enumerate() {
        let display = catalog::entry(&r.entry_id)
            .map(|e| e.display_integrand)
            .unwrap_or("?");
        let _ = writeln!(
            out,
            "{:>3}  {:<58} {:>13.3e} {:>13.3e}  {}",
            i + 1,
            display,
            r.rel_residual,
            r.abs_residual,
            r.verdict.name()
        );
    }
    debug_assert_eq!(reports.len(), TABLE_ROWS.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_json_is_bare_array() {
        assert_eq!(render_report(&[], Format::Json), "[]");
    }

    #[test]
    fn csv_has_header_plus_one_line_per_report() {
        use crate::verify::{verify_entry, VerifyOptions};
        let mut p = crate::catalog::ParamSet::default();
        for (k, v) in [("n", 1.0), ("m", 2.0), ("l", 3.0)] {
            p.set(k, num_complex::Complex64::new(v, 0.0)).unwrap();
        }
        let r = verify_entry("grad-3.244.4", &p, &VerifyOptions::default()).unwrap();
        let csv = render_report(&[r], Format::Csv);
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("entry_id,verdict"));
        assert!(lines[1].starts_with("grad-3.244.4,pass"));
    }

    #[test]
    fn json_fields_match_the_report_contract() {
        use crate::verify::{verify_entry, VerifyOptions};
        let mut p = crate::catalog::ParamSet::default();
        for (k, v) in [("n", 1.0), ("m", 2.0), ("l", 3.0)] {
            p.set(k, num_complex::Complex64::new(v, 0.0)).unwrap();
        }
        let r = verify_entry("grad-3.244.4", &p, &VerifyOptions::default()).unwrap();
        let j: serde_json::Value = serde_json::from_str(&render_report(&[r], Format::Json)).unwrap();
        let obj = &j.as_array().unwrap()[0];
        for field in [
            "entry_id",
            "params",
            "lhs",
            "rhs",
            "abs_residual",
            "rel_residual",
            "lhs_diag",
            "rhs_diag",
            "verdict",
            "wall_time",
        ] {
            assert!(obj.get(field).is_some(), "missing {field}");
        }
        assert!(obj["lhs"].get("re").is_some() && obj["lhs"].get("im").is_some());
        assert_eq!(obj["verdict"], "pass");
    }
}
