use num_complex::Complex64;

use crate::{FiniteDiff, MetricComponents, MetricError, MetricParams, SiegelPoint};

/// A Kähler form on H⁺ × C given by its coefficient matrix.
pub trait KahlerForm: Sync {
    fn components(&self, pt: &SiegelPoint) -> MetricComponents;
}

impl KahlerForm for MetricParams {
    fn components(&self, pt: &SiegelPoint) -> MetricComponents {
        let (v, y) = (pt.v(), pt.y());
        MetricComponents {
            a: self.delta / (v * v) + self.epsilon * y * y / (v * v * v),
            b: Complex64::new(-self.epsilon * y / (v * v), 0.0),
            c: self.epsilon / v,
        }
    }
}

type Alpha = Box<dyn Fn(Complex64) -> f64 + Send + Sync>;
type Beta = Box<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// The general family with free `α(ζ)`, `β(ζ)`:
/// `A = α − (y/v)(β + β̄) + y²/v³`, `B = β − y/v²`, `C = 1/v`.
pub struct AlphaBeta {
    alpha: Alpha,
    beta: Beta,
}

impl AlphaBeta {
    pub fn new(alpha: Alpha, beta: Beta) -> AlphaBeta {
        AlphaBeta { alpha, beta }
    }

    /// `α = 1/v²` with a constant `β`.
    pub fn constant_beta(beta: Complex64) -> AlphaBeta {
        AlphaBeta::new(Box::new(|z: Complex64| 1.0 / (z.im * z.im)), Box::new(move |_| beta))
    }
}

impl KahlerForm for AlphaBeta {
    fn components(&self, pt: &SiegelPoint) -> MetricComponents {
        let (v, y) = (pt.v(), pt.y());
        let al = (self.alpha)(pt.zeta);
        let be = (self.beta)(pt.zeta);
        MetricComponents {
            a: al - y / v * 2.0 * be.re + y * y / (v * v * v),
            b: be - y / (v * v),
            c: 1.0 / v,
        }
    }
}

fn require_v(pt: &SiegelPoint, min: f64) -> Result<(), MetricError> {
    if pt.v() > min {
        Ok(())
    } else {
        Err(MetricError::Domain(format!("v = {} must exceed {min}", pt.v())))
    }
}

/// `−δ log v² + ε y²/v`.
pub fn potential(p: &MetricParams, pt: &SiegelPoint) -> Result<f64, MetricError> {
    require_v(pt, 0.0)?;
    let (v, y) = (pt.v(), pt.y());
    Ok(-p.delta * (v * v).ln() + p.epsilon * y * y / v)
}

pub fn metric_components(p: &MetricParams, pt: &SiegelPoint) -> Result<MetricComponents, MetricError> {
    require_v(pt, 0.0)?;
    Ok(p.components(pt))
}

/// Components from second differences of the potential:
/// `A = 2ψ_ζζ̄`, `B = 2ψ_ζz̄`, `C = 2ψ_zz̄`.
pub fn metric_components_fd(p: &MetricParams, pt: &SiegelPoint, fd: &FiniteDiff)
    -> Result<MetricComponents, MetricError> {
    require_v(pt, 2.0 * fd.h)?;
    let psi = |c: [f64; 4]| -p.delta * (c[1] * c[1]).ln() + p.epsilon * c[3] * c[3] / c[1];
    let (zz, ww, zw) = fd.complex_hessian(&psi, pt.coords());
    Ok(MetricComponents { a: 2.0 * zz, b: zw * 2.0, c: 2.0 * ww })
}

/// Scalar curvature `−4/det · (C F_ζζ̄ + A F_zz̄ − 2 Re(B̄ F_ζz̄))` with
/// `F = log det`, derivatives by finite differences. The factor 4 is the one
/// for which the base metric has curvature −3.
pub fn scalar_curvature_of<K: KahlerForm + ?Sized>(k: &K, pt: &SiegelPoint, fd: &FiniteDiff)
    -> Result<f64, MetricError> {
    require_v(pt, 2.0 * fd.h)?;
    let m = k.components(pt);
    if !m.is_positive() {
        return Err(MetricError::Domain(format!("metric not positive at {:?}", pt.coords())));
    }
    let f = |c: [f64; 4]| k.components(&SiegelPoint::from_coords(c)).det().ln();
    let (fzz, fww, fzw) = fd.complex_hessian(&f, pt.coords());
    Ok(-4.0 / m.det() * (m.c * fzz + m.a * fww - 2.0 * (m.b.conj() * fzw).re))
}

pub fn scalar_curvature(p: &MetricParams, pt: &SiegelPoint, fd: &FiniteDiff) -> Result<f64, MetricError> {
    scalar_curvature_of(p, pt, fd)
}

/// Midpoint rule for `∫ C dx∧dy` over the cell spanned by 1 and ζ.
pub fn fiber_volume_of<K: KahlerForm + ?Sized>(k: &K, zeta: Complex64, n: usize) -> Result<f64, MetricError> {
    if !(zeta.im > 0.0) {
        return Err(MetricError::Domain(format!("Im zeta = {} is not positive", zeta.im)));
    }
    if n < 16 {
        return Err(MetricError::Domain(format!("grid {n} below 16")));
    }
    let cell = 1.0 / (n * n) as f64 * zeta.im;
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (s, t) = ((i as f64 + 0.5) / n as f64, (j as f64 + 0.5) / n as f64);
            let pt = SiegelPoint { zeta, z: zeta * t + s };
            total += k.components(&pt).c * cell;
        }
    }
    Ok(total)
}

pub fn fiber_volume(p: &MetricParams, zeta: Complex64, n: usize) -> Result<f64, MetricError> {
    fiber_volume_of(p, zeta, n)
}
