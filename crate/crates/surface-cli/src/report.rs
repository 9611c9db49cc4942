use exact_core::{PiRatio, Rat};
use fiber_catalog::{extension_exponents, fiber_constants, ComponentExponent, FiberConstants, FiberKind};
use flow_calculator::{
    krf_a_limit, scalar_curvature_eta_t, series_identity, t_interval, t_zero, twisted_coefficient, CurvatureReport,
    SurfaceScalars,
};
use lattice_classes::{
    alternate_ib_closed_form, assemble_eta_class, canonical_class, class_d_x, compute_np, np_residual, DivisorClass,
    SurfaceData,
};
use serde::Serialize;

use crate::verify::{verify_metric, verify_series, SeriesVerification, Verification};
use crate::{validate_surface, CliError, Diagnostic, SurfaceFile};

pub const SCHEMA: &str = "kodaira-lab/1";

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub verify: bool,
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { verify: false, samples: 20, tol: 1e-6, seed: 1 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub surface: SurfaceFile,
    pub canonical_class: DivisorClass,
    pub eta_class: DivisorClass,
    #[serde(rename = "D_X")]
    pub d_x: DivisorClass,
    pub series: SeriesSection,
    pub twisted_coefficients: Vec<TwistedEntry>,
    pub fibers: Vec<FiberReport>,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
}

impl Report {
    /// False only when `--verify` ran and some check failed.
    pub fn verified(&self) -> bool {
        self.verification.as_ref().is_none_or(|v| v.metric.passed() && v.series.pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvaturePair {
    pub printed: PiRatio,
    pub derived: PiRatio,
    pub ratio: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesSection {
    pub available: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_interval: Option<[Rat; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_zero: Option<PiRatio>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curvature_at_t_zero: Option<CurvaturePair>,
    pub curvature_table: Vec<CurvatureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub krf_a_limit: Option<PiRatio>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_at_epsilon_one: Option<bool>,
}

impl SeriesSection {
    fn unavailable(reason: String) -> SeriesSection {
        SeriesSection {
            available: false,
            reason: Some(reason),
            t_interval: None,
            t_zero: None,
            curvature_at_t_zero: None,
            curvature_table: Vec::new(),
            krf_a_limit: None,
            identity_at_epsilon_one: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistedEntry {
    pub fiber: String,
    pub kind: FiberKind,
    pub d_p: u32,
    pub coefficient: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCheck {
    pub values: Vec<Rat>,
    pub solves_system: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub fiber: String,
    pub kind: FiberKind,
    pub d_p: u32,
    pub constants: FiberConstants,
    pub n_p: Vec<Rat>,
    pub n_p_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternate_closed_form: Option<ClosedFormCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<ComponentExponent>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationSection {
    pub metric: MetricSummary,
    pub series: SeriesVerification,
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricSummary {
    pub samples: usize,
    pub seed: u64,
    pub summary: Vec<crate::verify::CheckSummary>,
}

impl MetricSummary {
    pub fn passed(&self) -> bool {
        self.summary.iter().all(|s| s.pass)
    }
}

impl From<(usize, u64, Verification)> for MetricSummary {
    fn from((samples, seed, v): (usize, u64, Verification)) -> Self {
        MetricSummary { samples, seed, summary: v.summary }
    }
}

/// The `N_p` data for one kind, including the check of the alternate I_b
/// closed form.
pub fn fiber_np(kind: FiberKind) -> Result<(Vec<Rat>, bool, Option<ClosedFormCheck>), CliError> {
    let n_p = compute_np(kind)?;
    let exact = np_residual(kind, &n_p)?.iter().all(Rat::is_zero);
    let alt = match kind {
        FiberKind::I(b) if b >= 2 => {
            let values = alternate_ib_closed_form(b);
            let solves_system = np_residual(kind, &values)?.iter().all(Rat::is_zero);
            Some(ClosedFormCheck { values, solves_system })
        }
        _ => None,
    };
    Ok((n_p, exact, alt))
}

fn series_section(s: &SurfaceData, for_classes: &SurfaceData) -> Result<SeriesSection, CliError> {
    let sc = match SurfaceScalars::from_surface(s) {
        Ok(sc) => sc,
        Err(e) => return Ok(SeriesSection::unavailable(e.to_string())),
    };
    let (lo, hi) = t_interval(&sc)?;
    let t0 = t_zero(&sc);
    let derived = PiRatio::from_rat(Rat::int(-3)).div(&t0)?;
    let printed = PiRatio::from_rat(Rat::int(-6)).div(&t0)?;
    let ratio = printed.div(&derived)?.to_rat().ok_or_else(|| CliError::Usage("non-rational ratio".into()))?;
    let mut table = Vec::new();
    for k in 1..=3 {
        let t = &hi * &Rat::new(k, 4)?;
        table.push(scalar_curvature_eta_t(&t, &sc)?);
    }
    let identity = series_identity(for_classes, &Rat::one())?;
    Ok(SeriesSection {
        available: true,
        reason: None,
        t_interval: Some([lo, hi]),
        t_zero: Some(t0),
        curvature_at_t_zero: Some(CurvaturePair { printed, derived, ratio }),
        curvature_table: table,
        krf_a_limit: Some(krf_a_limit(&sc)),
        identity_at_epsilon_one: Some(identity.holds),
    })
}

pub fn build_report(s: &SurfaceData, opts: &ReportOptions) -> Result<Report, CliError> {
    let mut classes = s.clone();
    classes.sections.retain(|x| x.in_mw0);
    let mut fibers = Vec::new();
    let mut twisted = Vec::new();
    for (p, f) in s.fibers.iter().enumerate() {
        let (n_p, n_p_exact, alternate_closed_form) = fiber_np(f.kind)?;
        fibers.push(FiberReport {
            fiber: format!("p{p}"),
            kind: f.kind,
            d_p: f.d_p,
            constants: fiber_constants(f.kind),
            n_p,
            n_p_exact,
            alternate_closed_form,
            exponents: extension_exponents(f.kind).ok(),
        });
        twisted.push(TwistedEntry {
            fiber: format!("p{p}"),
            kind: f.kind,
            d_p: f.d_p,
            coefficient: twisted_coefficient(f.kind, f.d_p)?,
        });
    }
    let verification = if opts.verify {
        let metric = verify_metric(opts.samples, opts.tol, opts.seed)?;
        Some(VerificationSection {
            metric: (opts.samples, opts.seed, metric).into(),
            series: verify_series(opts.seed)?,
        })
    } else {
        None
    };
    Ok(Report {
        schema: SCHEMA,
        surface: SurfaceFile::from(s),
        canonical_class: canonical_class(s.genus, s.chi),
        eta_class: assemble_eta_class(&classes, None)?,
        d_x: class_d_x(&classes)?,
        series: series_section(s, &classes)?,
        twisted_coefficients: twisted,
        fibers,
        diagnostics: validate_surface(s),
        verification,
    })
}

pub fn report_json(r: &Report) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(r)?)
}
