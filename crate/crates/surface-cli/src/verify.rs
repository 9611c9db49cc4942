use std::f64::consts::PI;

use metric_lab::{
    fiber_volume, invariance_residual, invariance_residual_of, limit_balance_residual, scalar_curvature,
    AlphaBeta, FiniteDiff, GroupElement, MetricError, MetricParams, SiegelPoint,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use weierstrass::{calibration_sweep, j_normalized, nodal_fiber_check, Calibration, SeriesError, CALIBRATED};

/// Metric families `(δ, ε)` checked by default.
pub const FAMILIES: [(f64, f64); 4] = [(1.0, 1.0), (2.0, 1.0), (3.0, 2.0), (1.0, 0.5)];

/// One line of a verification table. `point` is `[u, v, x, y]` when the
/// check is pointwise, empty otherwise.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub check: &'static str,
    pub point: Vec<f64>,
    pub quantity: String,
    pub expected: f64,
    pub got: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckSummary {
    pub check: &'static str,
    pub rows: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verification {
    pub rows: Vec<Row>,
    pub summary: Vec<CheckSummary>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.summary.iter().all(|s| s.pass)
    }

    fn push(&mut self, check: &'static str, tolerance: f64, rows: Vec<Row>) {
        let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
        let pass = rows.iter().all(|r| r.pass);
        self.summary.push(CheckSummary { check, rows: rows.len(), max_residual, tolerance, pass });
        self.rows.extend(rows);
    }
}

pub fn random_points(rng: &mut ChaCha8Rng, n: usize, v: (f64, f64), zmax: f64) -> Vec<SiegelPoint> {
    (0..n)
        .map(|_| {
            let z = Complex64::from_polar(rng.gen_range(0.0..zmax), rng.gen_range(0.0..std::f64::consts::TAU));
            SiegelPoint::from_parts(rng.gen_range(-2.0..2.0), rng.gen_range(v.0..v.1), z.re, z.im)
                .expect("v > 0")
        })
        .collect()
}

fn coords(p: &SiegelPoint) -> Vec<f64> {
    vec![p.u(), p.v(), p.x(), p.y()]
}

fn within(check: &'static str, point: Vec<f64>, quantity: String, expected: f64, got: f64, tol: f64) -> Row {
    let residual = (got - expected).abs();
    Row { check, point, quantity, expected, got, residual, pass: residual <= tol }
}

/// Curvature, fiber volume, group invariance (with a perturbed negative
/// control) and the twisted limit balance. `tol` bounds the curvature error;
/// the other checks have fixed tolerances.
pub fn verify_metric(samples: usize, tol: f64, seed: u64) -> Result<Verification, MetricError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fd = FiniteDiff::richardson(1e-3);
    let pts = random_points(&mut rng, samples, (0.2, 5.0), 3.0);
    let mut out = Verification { rows: Vec::new(), summary: Vec::new() };

    let mut rows = Vec::new();
    for (d, e) in FAMILIES {
        let p = MetricParams::new(d, e)?;
        for pt in &pts {
            let s = scalar_curvature(&p, pt, &fd)?;
            rows.push(within("curvature", coords(pt), format!("s(delta={d},eps={e})"), -3.0 / d, s, tol));
        }
    }
    out.push("curvature", tol, rows);

    let mut rows = Vec::new();
    for (d, e) in FAMILIES {
        let p = MetricParams::new(d, e)?;
        for pt in pts.iter().take(10) {
            let vol = fiber_volume(&p, pt.zeta, 16)?;
            rows.push(within("fiber_volume", coords(pt), format!("vol(delta={d},eps={e})"), e, vol, 1e-9));
        }
    }
    out.push("fiber_volume", 1e-9, rows);

    let inv_pts = random_points(&mut rng, samples.min(25), (0.3, 3.0), 2.0);
    let mut rows = Vec::new();
    for (name, g) in ["T", "S", "(1,0)", "(0,1)"].into_iter().zip(GroupElement::generators()) {
        for (d, e) in FAMILIES {
            let r = invariance_residual(&g, &MetricParams::new(d, e)?, &inv_pts)?;
            rows.push(within("invariance", vec![], format!("g={name},delta={d},eps={e}"), 0.0, r, 1e-9));
        }
    }
    out.push("invariance", 1e-9, rows);

    let perturbed = AlphaBeta::constant_beta(Complex64::new(0.1, 0.0));
    let s = GroupElement::generators()[1];
    let r = invariance_residual_of(&s, &perturbed, &inv_pts)?;
    let control = Row {
        check: "negative_control",
        point: vec![],
        quantity: "beta=0.1 under S".into(),
        expected: 0.0,
        got: r,
        residual: r,
        pass: r > 1e-3,
    };
    out.push("negative_control", 1e-3, vec![control]);

    let mut rows = Vec::new();
    for pt in random_points(&mut rng, samples.min(50), (0.2, 5.0), 1.0) {
        let r = limit_balance_residual(pt.zeta, &fd)?;
        rows.push(within("limit_balance", vec![pt.u(), pt.v()], "Ric + omega_inf - omega_WP".into(), 0.0, r, 1e-6));
    }
    out.push("limit_balance", 1e-6, rows);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesVerification {
    pub nodal_max_residual: f64,
    pub j_i_residual: f64,
    pub j_rho_residual: f64,
    pub calibration: Calibration,
    pub calibrated_variant_selected: bool,
    pub pass: bool,
}

/// Samples `(τ, w)` with `|τ| ≤ tmax` and `|w|` in the given range.
pub fn series_samples(rng: &mut ChaCha8Rng, n: usize, tmax: f64, w: (f64, f64)) -> Vec<(Complex64, Complex64)> {
    (0..n)
        .map(|_| {
            let t = Complex64::from_polar(rng.gen_range(0.0..tmax), rng.gen_range(0.0..2.0 * PI));
            let w = Complex64::from_polar(rng.gen_range(w.0..w.1), rng.gen_range(0.3..2.0 * PI - 0.3));
            (t, w)
        })
        .collect()
}

/// Nodal identity on the unit circle, special values of j and the sign
/// calibration of the cubic.
pub fn verify_series(seed: u64) -> Result<SeriesVerification, SeriesError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nodal = 0.0f64;
    for k in 0..100 {
        nodal = nodal.max(nodal_fiber_check(Complex64::from_polar(1.0, 2.0 * PI * (k as f64 + 0.5) / 100.0))?);
    }
    let j_i = (j_normalized(Complex64::i(), 60)? - 1.0).norm();
    let j_rho = j_normalized(Complex64::from_polar(1.0, 2.0 * PI / 3.0), 60)?.norm();
    let calibration = calibration_sweep(&series_samples(&mut rng, 20, 0.1, (0.3, 2.5)), 60, 1e-8)?;
    let selected = calibration.selected == Some(CALIBRATED);
    let pass = nodal < 1e-12 && j_i < 1e-8 && j_rho < 1e-8 && selected;
    Ok(SeriesVerification {
        nodal_max_residual: nodal,
        j_i_residual: j_i,
        j_rho_residual: j_rho,
        calibration,
        calibrated_variant_selected: selected,
        pass,
    })
}
