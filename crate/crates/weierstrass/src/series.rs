use num_complex::Complex64;
use serde::Serialize;

use crate::sum::{power_tail, Kahan};
use crate::SeriesError;

const POLE_EPS: f64 = 1e-12;

/// A truncated series value together with a bound on the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// Allowance for rounding in a sum of `n` terms of total magnitude `mag`.
fn rounding(mag: f64, n: usize) -> f64 {
    8.0 * f64::EPSILON * mag * (n as f64 + 1.0).log2().max(1.0)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `(g₂, g₃)` of the multiplicative model, `τ` the nome-like disk variable.
pub fn eisenstein_g(tau: Complex64, terms: usize) -> Result<(SeriesValue, SeriesValue), SeriesError> {
    let r = tau.norm();
    if !(r < 0.9) {
        return Err(SeriesError::ConvergenceGuard(format!("|tau| = {r} >= 0.9")));
    }
    let (mut g2, mut g3) = (Kahan::default(), Kahan::default());
    let (mut mag2, mut mag3) = (0.0, 0.0);
    let mut tn = one();
    for n in 1..=terms {
        tn *= tau;
        let nf = n as f64;
        let base = tn / (one() - tn);
        let (a, b) = (base * 20.0 * nf.powi(3), base * (7.0 * nf.powi(5) + 5.0 * nf.powi(3)) / 3.0);
        mag2 += a.norm();
        mag3 += b.norm();
        g2.add(a);
        g3.add(b);
    }
    let damp = 1.0 / (1.0 - r.powi(terms as i32 + 1));
    let t2 = 20.0 * power_tail(3, r, terms) * damp;
    let t3 = (7.0 * power_tail(5, r, terms) + 5.0 * power_tail(3, r, terms)) / 3.0 * damp;
    Ok((
        SeriesValue { value: g2.value(), tail_bound: t2 + rounding(mag2, terms) },
        SeriesValue { value: g3.value(), tail_bound: t3 + rounding(mag3, terms) },
    ))
}

/// Kodaira's `(x, y)` by symmetric truncation `|n| ≤ N`, terms added in order
/// of increasing `|n|`. Negative `n` are rewritten in `u = τ^{|n|}/w`.
pub fn kodaira_xy(tau: Complex64, w: Complex64, terms: usize)
    -> Result<(SeriesValue, SeriesValue), SeriesError> {
    let r = tau.norm();
    if !(r < 1.0) {
        return Err(SeriesError::ConvergenceGuard(format!("|tau| = {r} >= 1")));
    }
    if w.norm() == 0.0 || !w.norm().is_finite() {
        return Err(SeriesError::Domain("w must be a nonzero finite number".into()));
    }
    if r > 0.0 && !(r < w.norm() && w.norm() * r < 1.0) {
        return Err(SeriesError::ConvergenceGuard(format!("need |tau| < |w| < 1/|tau|, got |w| = {}", w.norm())));
    }
    let x_term = |s: Complex64| s / (one() - s).powu(2);
    let y_term = |s: Complex64| s * (one() + s) / (one() - s).powu(3);
    let check = |s: Complex64, n: i64| {
        if (one() - s).norm() < POLE_EPS {
            Err(SeriesError::PoleHit { n })
        } else {
            Ok(s)
        }
    };
    let (mut x, mut y) = (Kahan::default(), Kahan::default());
    let (mut mx, mut my) = (0.0, 0.0);
    let mut push = |dx: Complex64, dy: Complex64| {
        mx += dx.norm();
        my += dy.norm();
        x.add(dx);
        y.add(dy);
    };
    let s0 = check(w, 0)?;
    push(x_term(s0), y_term(s0));
    let mut tn = one();
    for n in 1..=terms {
        if r == 0.0 {
            break;
        }
        tn *= tau;
        let s = check(w * tn, n as i64)?;
        let u = check(tn / w, -(n as i64))?;
        push(tn * -2.0 / (one() - tn).powu(2), Complex64::new(0.0, 0.0));
        push(x_term(s), y_term(s));
        push(x_term(u), -y_term(u));
    }
    let (x, y) = (x.value(), y.value());
    let (ex, ey) = (rounding(mx, 2 * terms + 1), rounding(my, 2 * terms + 1));
    if r == 0.0 {
        return Ok((SeriesValue { value: x, tail_bound: ex }, SeriesValue { value: y, tail_bound: ey }));
    }
    let m = w.norm().max(1.0 / w.norm());
    let rn = r.powi(terms as i32 + 1);
    let lead = m * rn / (1.0 - r);
    let tx = 2.0 * lead / (1.0 - m * rn).powi(2) + 2.0 * rn / ((1.0 - r) * (1.0 - rn).powi(2));
    let ty = 2.0 * lead * (1.0 + m * rn) / (1.0 - m * rn).powi(3);
    let (tx, ty) = if m * rn < 1.0 { (tx, ty) } else { (f64::INFINITY, f64::INFINITY) };
    Ok((SeriesValue { value: x, tail_bound: tx + ex }, SeriesValue { value: y, tail_bound: ty + ey }))
}

/// Sign choice in `y² − 4x³ − x² + s₂ g₂ x + s₃ g₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CubicVariant {
    pub g2_sign: i8,
    pub g3_sign: i8,
}

impl CubicVariant {
    /// The relation as written: `y² − 4x³ − x² + g₂x + g₃`.
    pub const PRINTED: CubicVariant = CubicVariant { g2_sign: 1, g3_sign: 1 };

    pub fn all() -> [CubicVariant; 4] {
        [
            CubicVariant::PRINTED,
            CubicVariant { g2_sign: -1, g3_sign: 1 },
            CubicVariant { g2_sign: 1, g3_sign: -1 },
            CubicVariant { g2_sign: -1, g3_sign: -1 },
        ]
    }
}

/// Variant selected by [`calibration_sweep`]; the tests re-run the sweep
/// and check it still selects this one.
pub const CALIBRATED: CubicVariant = CubicVariant::PRINTED;

/// `|value|` divided by the size of the largest summand when that exceeds 1,
/// so that large coordinates near a pole do not swamp the comparison.
fn scaled(terms: &[Complex64]) -> f64 {
    let total: Complex64 = terms.iter().sum();
    let size = terms.iter().map(|t| t.norm()).fold(1.0, f64::max);
    total.norm() / size
}

/// Residual of the cubic relation for the given sign choice.
pub fn cubic_residual(variant: CubicVariant, tau: Complex64, w: Complex64, terms: usize)
    -> Result<f64, SeriesError> {
    let (x, y) = kodaira_xy(tau, w, terms)?;
    let (g2, g3) = eisenstein_g(tau, terms)?;
    let (x, y) = (x.value, y.value);
    Ok(scaled(&[
        y * y,
        -x.powu(3) * 4.0,
        -x * x,
        g2.value * x * variant.g2_sign as f64,
        g3.value * variant.g3_sign as f64,
    ]))
}

pub fn weierstrass_residual(tau: Complex64, w: Complex64, terms: usize) -> Result<f64, SeriesError> {
    cubic_residual(CALIBRATED, tau, w, terms)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VariantResidual {
    pub variant: CubicVariant,
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Calibration {
    pub variants: Vec<VariantResidual>,
    /// First variant, in the order of [`CubicVariant::all`], whose largest
    /// residual is below the threshold.
    pub selected: Option<CubicVariant>,
    pub threshold: f64,
}

pub fn calibration_sweep(samples: &[(Complex64, Complex64)], terms: usize, threshold: f64)
    -> Result<Calibration, SeriesError> {
    let mut variants = Vec::new();
    for v in CubicVariant::all() {
        let mut worst: f64 = 0.0;
        for &(t, w) in samples {
            worst = worst.max(cubic_residual(v, t, w, terms)?);
        }
        variants.push(VariantResidual { variant: v, max_residual: worst });
    }
    let selected = variants.iter().find(|r| r.max_residual < threshold).map(|r| r.variant);
    Ok(Calibration { variants, selected, threshold })
}

/// `y² − 4x³ − x²` on the central fiber; zero away from the node.
pub fn nodal_fiber_check(w: Complex64) -> Result<f64, SeriesError> {
    let (x, y) = kodaira_xy(Complex64::new(0.0, 0.0), w, 0)?;
    let (x, y) = (x.value, y.value);
    Ok(scaled(&[y * y, -x.powu(3) * 4.0, -x * x]))
}
