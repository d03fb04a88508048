//! Command-line interface.
//!
//! Exit codes: 0 when no verdict is `fail`, 1 when any is, 2 on usage or
//! domain errors. All output is UTF-8; json output is wrapped in a
//! `{"schema":1,"reports":[...]}` envelope.

use std::ffi::OsString;

use clap::{Parser, Subcommand};

use crate::catalog::{self, ParamSet};
use crate::complex::{fmt_complex, parse_complex};
use crate::quadrature::integrate_halfline;
use crate::specfun::{self, EvalResult, LerchArgs};
use crate::verify::render::{render_json_envelope, render_report, render_table_text, Format};
use crate::verify::{sweep, verify_entry, BoxDim, SweepSpec, Verdict, VerifyOptions};
use crate::{Budget, Precision};

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    match s {
        "fast" => Ok(Precision::Fast),
        "default" => Ok(Precision::Default),
        "high" => Ok(Precision::High),
        other => Err(format!("unknown precision `{other}` (fast|default|high)")),
    }
}

#[derive(Parser)]
#[command(
    name = "lerchkit",
    version,
    about = "Catalog of log-power definite integrals with a quadrature referee",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List catalog entries (id, anchor, tolerance class)
    List {
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Check one entry: quadrature against the closed form
    Verify {
        #[arg(long)]
        entry: String,
        /// Parameter assignment name=value; value is a complex literal
        /// `re[+im i]` (repeatable)
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Pass/fail tolerance (per-class default when omitted)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
        /// Record wall-clock times (waives byte-reproducible output)
        #[arg(long)]
        timings: bool,
    },
    /// Random parameter sweep of one entry
    Sweep {
        #[arg(long)]
        entry: String,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Override a sweep axis: name=lo:hi or name=lo:hi@imlo:imhi
        #[arg(long = "box", value_name = "NAME=LO:HI")]
        boxes: Vec<String>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
    },
    /// Verify all fifteen table rows at their defaults, in source order
    Table {
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate a special function directly
    Eval {
        #[command(subcommand)]
        what: EvalCmd,
    },
    /// Quadrature side only (lhs) of one entry
    Quad {
        #[arg(long)]
        entry: String,
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
    },
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Lerch transcendent Phi(z, s, v)
    Phi {
        #[arg(long)]
        z: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
    },
    /// Polylogarithm Li_s(z)
    Polylog {
        #[arg(long)]
        s: String,
        #[arg(long)]
        z: String,
        #[arg(long, default_value = "default", value_parser = parse_precision)]
        precision: Precision,
    },
    /// Hurwitz zeta zeta(s, v)
    Hzeta {
        #[arg(long)]
        s: String,
        #[arg(long)]
        v: String,
    },
    /// Complex Gamma
    Gamma {
        #[arg(long)]
        s: String,
    },
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn params_for(entry: &str, sets: &[String]) -> crate::Result<ParamSet> {
    let mut p = catalog::entry(entry)?.defaults[0];
    for s in sets {
        p.assign(s)?;
    }
    Ok(p)
}

fn parse_box(spec: &str) -> crate::Result<BoxDim> {
    let err = || crate::Error::Domain(format!("bad --box spec `{spec}` (name=lo:hi[@imlo:imhi])"));
    let (name, rest) = spec.split_once('=').ok_or_else(err)?;
    let (re_part, im_part) = match rest.split_once('@') {
        Some((r, i)) => (r, Some(i)),
        None => (rest, None),
    };
    let parse_range = |t: &str| -> crate::Result<(f64, f64)> {
        let (lo, hi) = t.split_once(':').ok_or_else(err)?;
        let lo: f64 = lo.trim().parse().map_err(|_| err())?;
        let hi: f64 = hi.trim().parse().map_err(|_| err())?;
        if !(lo < hi) {
            return Err(err());
        }
        Ok((lo, hi))
    };
    Ok(BoxDim {
        name: name.trim().to_string(),
        re: parse_range(re_part)?,
        im: im_part.map(parse_range).transpose()?,
    })
}

fn exit_code(reports: &[crate::verify::VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else {
        0
    }
}

fn print_reports(reports: &[crate::verify::VerificationReport], format: Format) {
    match format {
        Format::Json => println!("{}", render_json_envelope(reports, None)),
        _ => print!("{}", render_report(reports, format)),
    }
}

fn print_eval(name: &str, r: &EvalResult) {
    println!(
        "{name} = {}\n  est_error = {:.3e}  strategy = {}  work = {}",
        fmt_complex(r.value),
        r.est_error,
        r.strategy.name(),
        r.terms_or_nodes
    );
}

fn dispatch(cli: Cli) -> crate::Result<i32> {
    match cli.cmd {
        Cmd::List { format } => {
            let list = catalog::list_entries();
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = list
                        .iter()
                        .map(|(id, anchor, class)| {
                            serde_json::json!({
                                "id": id,
                                "anchor": anchor,
                                "tolerance_class": class.name(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&rows).unwrap());
                }
                _ => {
                    for (id, anchor, class) in list {
                        println!("{id:<22} {:<16} {anchor}", class.name());
                    }
                }
            }
            Ok(0)
        }
        Cmd::Verify {
            entry,
            set,
            tol,
            format,
            precision,
            timings,
        } => {
            let p = params_for(&entry, &set)?;
            let opts = VerifyOptions {
                budget: precision.budget(),
                tol,
                timings,
            };
            let r = verify_entry(&entry, &p, &opts)?;
            let code = exit_code(std::slice::from_ref(&r));
            print_reports(&[r], format);
            Ok(code)
        }
        Cmd::Sweep {
            entry,
            count,
            seed,
            boxes,
            tol,
            format,
            precision,
        } => {
            let spec = SweepSpec {
                entry_id: entry,
                count,
                seed,
                boxes: boxes
                    .iter()
                    .map(|b| parse_box(b))
                    .collect::<crate::Result<Vec<_>>>()?,
            };
            let opts = VerifyOptions {
                budget: precision.budget(),
                tol,
                timings: false,
            };
            let out = sweep(&spec, &opts)?;
            match format {
                Format::Json => println!("{}", render_json_envelope(&out.reports, Some(&out.summary))),
                f => {
                    print!("{}", render_report(&out.reports, f));
                    eprintln!(
                        "sweep {}: {}/{} pass, {} fail, {} unsupported, {} documented; \
                         max rel residual {:.3e}; rejection rate {:.2}",
                        out.summary.entry_id,
                        out.summary.pass,
                        out.summary.count,
                        out.summary.fail,
                        out.summary.unsupported,
                        out.summary.discrepancy_documented,
                        out.summary.max_rel_residual,
                        out.summary.rejection_rate
                    );
                }
            }
            Ok(exit_code(&out.reports))
        }
        Cmd::Table {
            format,
            precision,
            timings,
        } => {
            let opts = VerifyOptions {
                budget: precision.budget(),
                tol: None,
                timings,
            };
            let reports = crate::verify::run_table(&opts)?;
            match format {
                Format::Json => println!("{}", render_json_envelope(&reports, None)),
                Format::Text => print!("{}", render_table_text(&reports)),
                Format::Csv => print!("{}", render_report(&reports, Format::Csv)),
            }
            Ok(exit_code(&reports))
        }
        Cmd::Eval { what } => {
            match what {
                EvalCmd::Phi { z, s, v, precision } => {
                    let args = LerchArgs::new(parse_complex(&z)?, parse_complex(&s)?, parse_complex(&v)?);
                    let r = specfun::lerch_phi(&args, &precision.budget())?;
                    print_eval("phi", &r);
                }
                EvalCmd::Polylog { s, z, precision } => {
                    let r = specfun::polylog(parse_complex(&s)?, parse_complex(&z)?, &precision.budget())?;
                    print_eval("polylog", &r);
                }
                EvalCmd::Hzeta { s, v } => {
                    let r = specfun::hurwitz_zeta(parse_complex(&s)?, parse_complex(&v)?)?;
                    print_eval("hzeta", &r);
                }
                EvalCmd::Gamma { s } => {
                    let g = specfun::gamma(parse_complex(&s)?)?;
                    println!("gamma = {}", fmt_complex(g));
                }
            }
            Ok(0)
        }
        Cmd::Quad {
            entry,
            set,
            tol,
            precision,
        } => {
            let p = params_for(&entry, &set)?;
            let e = catalog::entry(&entry)?;
            let budget: Budget = precision.budget();
            let quad_tol = tol.unwrap_or_else(|| e.tolerance_class.quad_tol());
            let f = e.make_integrand(&p)?;
            let q = integrate_halfline(&f, quad_tol, budget.quad_max_level)?;
            println!(
                "lhs = {}\n  est_error = {:.3e}  nodes = {}  level = {}  converged = {}",
                fmt_complex(q.value),
                q.est_error,
                q.nodes,
                q.level,
                q.converged
            );
            Ok(0)
        }
    }
}
