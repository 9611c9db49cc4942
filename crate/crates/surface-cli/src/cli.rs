use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use fiber_catalog::{component_labels, FiberKind};
use flow_calculator::{
    class_parameter, curvature_values, krf_a, krf_step, t_interval, t_zero, twisted_coefficient, SurfaceScalars,
};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;
use weierstrass::{eisenstein_g, kodaira_xy, weierstrass_residual, CALIBRATED};

use crate::report::{build_report, fiber_np, report_json, ReportOptions, SCHEMA};
use crate::verify::verify_metric;
use crate::{read_surface, CliError};

#[derive(Debug, Parser)]
#[command(name = "kodaira-lab", version, about = "Invariants of elliptic surfaces and their semi-flat metrics")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact class report for a surface file.
    Report {
        path: PathBuf,
        /// Add the numeric metric and series checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Fiber correction N_p for one Kodaira type.
    Np {
        kind: String,
        #[arg(long)]
        b: Option<u32>,
    },
    /// Pointwise checks of the semi-flat metric family.
    VerifyMetric {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Flow parameters at time t for a surface file.
    Flow {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0)]
        delta0: f64,
        #[arg(long, default_value_t = 1.0)]
        eps0: f64,
    },
    /// x, y, g2, g3 of the multiplicative model at (tau, w).
    Weierstrass {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 60)]
        terms: usize,
    },
}

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct C {
    re: f64,
    im: f64,
}

impl From<Complex64> for C {
    fn from(z: Complex64) -> C {
        C { re: z.re, im: z.im }
    }
}

fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    Complex64::from_str(&s.replace(' ', "")).map_err(|_| CliError::Usage(format!("cannot parse {s:?} as a+bi")))
}

fn parse_kind(kind: &str, b: Option<u32>) -> Result<FiberKind, CliError> {
    match FiberKind::from_parts(kind, b) {
        Ok(k) => Ok(k),
        Err(e) if b.is_none() => kind.parse().map_err(|_| e.into()),
        Err(e) => Err(e.into()),
    }
}

fn pretty<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Run a parsed command. Returns stdout text and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Report { path, verify, samples, tol, seed } => {
            let s = read_surface(path)?;
            let opts = ReportOptions { verify: *verify, samples: *samples, tol: *tol, seed: *seed };
            let r = build_report(&s, &opts)?;
            let code = if r.verified() { 0 } else { 2 };
            if cli.json {
                return Ok((report_json(&r)? + "\n", code));
            }
            let mut out = String::new();
            writeln!(out, "K_X   = {}", r.canonical_class).ok();
            writeln!(out, "[eta] = {}", r.eta_class).ok();
            writeln!(out, "D_X   = {}", r.d_x).ok();
            if r.series.available {
                let [lo, hi] = r.series.t_interval.as_ref().expect("available");
                writeln!(out, "t interval = ({lo}, {hi})").ok();
                writeln!(out, "t0 = {}", r.series.t_zero.as_ref().expect("available")).ok();
                if let Some(c) = &r.series.curvature_at_t_zero {
                    writeln!(out, "curvature at t0: derived {} printed {} (ratio {})", c.derived, c.printed, c.ratio)
                        .ok();
                }
            } else {
                writeln!(out, "series section unavailable: {}", r.series.reason.as_deref().unwrap_or("")).ok();
            }
            for f in &r.fibers {
                let n: Vec<String> = f.n_p.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{} {} d_p={}: N_p = [{}]", f.fiber, f.kind, f.d_p, n.join(", ")).ok();
            }
            for t in &r.twisted_coefficients {
                writeln!(out, "{} twisted coefficient {}", t.fiber, t.coefficient).ok();
            }
            for d in &r.diagnostics {
                writeln!(out, "{:?} [{}]: {}", d.severity, d.code, d.message).ok();
            }
            if let Some(v) = &r.verification {
                for s in &v.metric.summary {
                    writeln!(out, "verify {:<16} max residual {:.3e} (tol {:.0e}) {}", s.check, s.max_residual,
                        s.tolerance, if s.pass { "ok" } else { "FAIL" })
                    .ok();
                }
                writeln!(out, "verify series: nodal {:.3e}, calibration {:?} {}", v.series.nodal_max_residual,
                    v.series.calibration.selected, if v.series.pass { "ok" } else { "FAIL" })
                .ok();
            }
            Ok((out, code))
        }
        Command::Np { kind, b } => {
            let kind = parse_kind(kind, *b)?;
            let (n_p, exact, alt) = fiber_np(kind)?;
            if cli.json {
                let v = json!({
                    "schema": SCHEMA,
                    "kind": kind,
                    "components": component_labels(kind),
                    "n_p": n_p,
                    "exact": exact,
                    "alternate_closed_form": alt,
                });
                return Ok((pretty(&v)?, 0));
            }
            let mut out = format!("{kind}\n");
            for (l, c) in component_labels(kind).iter().zip(&n_p) {
                writeln!(out, "  {l:<10} {c}").ok();
            }
            if let Some(a) = alt {
                let vals: Vec<String> = a.values.iter().map(|x| x.to_string()).collect();
                writeln!(out, "  alternate closed form [{}] solves the system: {}", vals.join(", "), a.solves_system)
                    .ok();
            }
            Ok((out, 0))
        }
        Command::VerifyMetric { samples, tol, seed } => {
            let v = verify_metric(*samples, *tol, *seed)?;
            let code = if v.passed() { 0 } else { 2 };
            let mut out = String::new();
            if cli.json {
                for r in &v.rows {
                    out += &serde_json::to_string(r)?;
                    out.push('\n');
                }
                out += &serde_json::to_string(&json!({"schema": SCHEMA, "summary": v.summary, "pass": v.passed()}))?;
                out.push('\n');
                return Ok((out, code));
            }
            writeln!(out, "{:<18} {:>6} {:>12} {:>8}  result", "check", "rows", "max resid", "tol").ok();
            for s in &v.summary {
                writeln!(out, "{:<18} {:>6} {:>12.3e} {:>8.0e}  {}", s.check, s.rows, s.max_residual, s.tolerance,
                    if s.pass { "ok" } else { "FAIL" })
                .ok();
            }
            Ok((out, code))
        }
        Command::Flow { surface, t, delta0, eps0 } => {
            let s = read_surface(surface)?;
            let sc = SurfaceScalars::from_surface(&s)?;
            let (lo, hi) = t_interval(&sc)?;
            let state = krf_step(*delta0, *eps0, *t)?;
            let a = krf_a(*t, *delta0, *eps0, &sc)?;
            let tp = class_parameter(*t, *delta0, *eps0, &sc)?;
            let (printed, derived) = match curvature_values(tp, &sc) {
                Ok((p, d)) => (Some(p), Some(d)),
                Err(_) => (None, None),
            };
            let twisted = s
                .fibers
                .iter()
                .enumerate()
                .map(|(p, f)| Ok(json!({"fiber": format!("p{p}"), "kind": f.kind, "d_p": f.d_p,
                    "coefficient": twisted_coefficient(f.kind, f.d_p)?})))
                .collect::<Result<Vec<_>, CliError>>()?;
            let t0 = t_zero(&sc);
            let v = json!({
                "schema": SCHEMA,
                "interval": [lo, hi],
                "t0": t0,
                "class_parameter": tp,
                "curvature_printed": printed,
                "curvature_derived": derived,
                "state": state,
                "a": a,
                "twisted_coefficients": twisted,
            });
            if cli.json {
                return Ok((pretty(&v)?, 0));
            }
            let mut out = String::new();
            writeln!(out, "interval (0, {hi}), t0 = {t0} ~ {:.6}", t0.to_f64()).ok();
            writeln!(out, "t = {t}: delta = {:.6}, eps = {:.6}, a = {a:.6}, t' = {tp:.6}", state.delta, state.epsilon)
                .ok();
            match (printed, derived) {
                (Some(p), Some(d)) => writeln!(out, "curvature at t': derived {d:.6}, printed {p:.6}").ok(),
                _ => writeln!(out, "t' lies outside the interval; no curvature").ok(),
            };
            Ok((out, 0))
        }
        Command::Weierstrass { tau, w, terms } => {
            let (tau, w) = (parse_complex(tau)?, parse_complex(w)?);
            let (x, y) = kodaira_xy(tau, w, *terms)?;
            let (g2, g3) = eisenstein_g(tau, *terms)?;
            let residual = weierstrass_residual(tau, w, *terms)?;
            let tail = x.tail_bound.max(y.tail_bound).max(g2.tail_bound).max(g3.tail_bound);
            let v = json!({
                "schema": SCHEMA,
                "tau": C::from(tau),
                "w": C::from(w),
                "terms": terms,
                "x": C::from(x.value),
                "y": C::from(y.value),
                "g2": C::from(g2.value),
                "g3": C::from(g3.value),
                "variant": CALIBRATED,
                "residual": residual,
                "tail_bound": tail,
            });
            // JSON is the documented output of this verb either way.
            Ok((pretty(&v)?, 0))
        }
    }
}

/// Parse arguments and run. Usage errors exit 1, help and version 0.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Output { code, stdout, stderr: String::new() },
        Err(e) => Output { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
