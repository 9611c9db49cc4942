use std::f64::consts::PI;

use fiber_catalog::{local_period, validate_order, FiberKind, LocalModel};
use num_complex::Complex64;
use serde::Serialize;

use crate::{MetricError, MetricParams};

fn need_v0(v0: Option<f64>) -> Result<f64, MetricError> {
    match v0 {
        Some(v) if v > 0.0 => Ok(v),
        _ => Err(MetricError::Domain("I*_0 limits need v0 > 0".into())),
    }
}

/// The constants C_i as printed for the I*_0 components (index 1..=4) and
/// the IV* components (index 0..=2).
pub fn local_potential_limit(kind: FiberKind, index: usize, v0: Option<f64>) -> Result<f64, MetricError> {
    let bad = MetricError::BadIndex { kind, index };
    match kind {
        FiberKind::IStar(0) => {
            let v0 = need_v0(v0)?;
            match index {
                1 | 3 => Ok(-2.0 * v0.ln()),
                2 | 4 => Ok(-2.0 * v0.ln() + 3.0 / (16.0 * v0)),
                _ => Err(bad),
            }
        }
        FiberKind::IVStar => {
            let base = -(0.75f64).ln();
            let s3 = 3f64.sqrt();
            match index {
                0 => Ok(base),
                1 => Ok(base + s3 / 18.0),
                2 => Ok(base + 2.0 * s3 / 9.0),
                _ => Err(bad),
            }
        }
        _ => Err(bad),
    }
}

/// Value at the fixed point, `−2 log v₀ + (Im p_i)²/v₀`, where the orbit
/// average must converge.
pub fn fixed_point_value(kind: FiberKind, index: usize, v0: Option<f64>) -> Result<f64, MetricError> {
    let chart = Chart::new(kind, index, v0)?;
    let w = chart.period(Complex64::new(0.0, 0.0))?;
    let p = (chart.fixed)(w);
    Ok(-2.0 * w.im.ln() + p.im * p.im / w.im)
}

struct Chart {
    model: LocalModel,
    h: u32,
    fixed: Box<dyn Fn(Complex64) -> Complex64>,
    /// Factor `z − p_i = z_i / scale(τ)`.
    scale: Box<dyn Fn(Complex64) -> Complex64>,
}

impl Chart {
    fn new(kind: FiberKind, index: usize, v0: Option<f64>) -> Result<Chart, MetricError> {
        let one = Complex64::new(1.0, 0.0);
        match kind {
            FiberKind::IStar(0) => {
                let v0 = need_v0(v0)?;
                let model = LocalModel::new(kind, 1).with_omega0(Complex64::new(0.0, v0));
                let fixed: Box<dyn Fn(Complex64) -> Complex64> = match index {
                    1 => Box::new(|_| Complex64::new(0.0, 0.0)),
                    2 => Box::new(|w| w / 2.0),
                    3 => Box::new(|_| Complex64::new(0.5, 0.0)),
                    4 => Box::new(|w| (w + 1.0) / 2.0),
                    _ => return Err(MetricError::BadIndex { kind, index }),
                };
                Ok(Chart { model, h: 2, fixed, scale: Box::new(move |_| one) })
            }
            FiberKind::IVStar => {
                let d = (1..=12)
                    .find(|&d| validate_order(&LocalModel::new(kind, d)).ok)
                    .expect("IV* admits some d_p");
                let model = LocalModel::new(kind, d);
                let fixed: Box<dyn Fn(Complex64) -> Complex64> = match index {
                    0 => Box::new(|_| Complex64::new(0.0, 0.0)),
                    1 => Box::new(|w| w / 3.0 + 2.0 / 3.0),
                    2 => Box::new(|w| w * 2.0 / 3.0 + 1.0 / 3.0),
                    _ => return Err(MetricError::BadIndex { kind, index }),
                };
                Ok(Chart { model, h: 3, fixed, scale: Box::new(move |t: Complex64| one - t.powu(d)) })
            }
            _ => Err(MetricError::BadIndex { kind, index }),
        }
    }

    fn period(&self, tau: Complex64) -> Result<Complex64, MetricError> {
        Ok(local_period(&self.model, tau)?)
    }

    /// Orbit average of ψ at chart coordinates `(τ, z_i)`; the generator acts
    /// by `(e τ, e⁻¹ z_i)` with `e = exp(2πi/h)`.
    fn orbit_average(&self, p: &MetricParams, tau: Complex64, zi: Complex64) -> Result<f64, MetricError> {
        let e = Complex64::from_polar(1.0, 2.0 * PI / self.h as f64);
        let mut total = 0.0;
        for k in 0..self.h as i32 {
            let t = tau * e.powi(k);
            let w = self.period(t)?;
            let z = (self.fixed)(w) + zi * e.powi(-k) / (self.scale)(t);
            total += -p.delta * (w.im * w.im).ln() + p.epsilon * z.im * z.im / w.im;
        }
        Ok(total / self.h as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitEstimate {
    /// Mean of the extrapolated values over the radii.
    pub value: f64,
    /// Largest minus smallest extrapolated value.
    pub spread: f64,
    pub per_radius: Vec<f64>,
}

/// Full Richardson table for samples at `r, r/10, r/100, ...` of a function
/// analytic in `r`.
pub fn richardson_ratio10(samples: &[f64]) -> f64 {
    let mut row = samples.to_vec();
    let mut factor = 1.0;
    while row.len() > 1 {
        factor *= 10.0;
        row = row.windows(2).map(|w| (factor * w[1] - w[0]) / (factor - 1.0)).collect();
    }
    row[0]
}

/// Limit of the orbit-averaged potential at the fixed point of the given
/// component, approached along five radii with `r = 10^{-k}`, `k = 2..=5`.
pub fn orbit_averaged_limit(kind: FiberKind, index: usize, v0: Option<f64>, p: &MetricParams)
    -> Result<LimitEstimate, MetricError> {
    let chart = Chart::new(kind, index, v0)?;
    let mut per_radius = Vec::with_capacity(5);
    for j in 0..5 {
        let theta = 2.0 * PI * j as f64 / 5.0 + 0.3;
        let (dt, dz) = (Complex64::from_polar(1.0, theta), Complex64::from_polar(1.0, 1.7 * theta + 0.5));
        let mut samples = Vec::with_capacity(4);
        for k in 2..=5 {
            let r = 10f64.powi(-k);
            samples.push(chart.orbit_average(p, dt * r, dz * r)?);
        }
        per_radius.push(richardson_ratio10(&samples));
    }
    let value = per_radius.iter().sum::<f64>() / per_radius.len() as f64;
    let lo = per_radius.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = per_radius.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(LimitEstimate { value, spread: hi - lo, per_radius })
}
