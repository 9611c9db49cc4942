use num_complex::Complex64;
use serde::Serialize;

use crate::MetricError;

/// Point `(ζ, z)` of H⁺ × C, `ζ = u + iv`, `z = x + iy`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SiegelPoint {
    pub zeta: Complex64,
    pub z: Complex64,
}

impl SiegelPoint {
    pub fn new(zeta: Complex64, z: Complex64) -> Result<SiegelPoint, MetricError> {
        if !(zeta.im > 0.0) || !zeta.re.is_finite() || !z.norm().is_finite() {
            return Err(MetricError::Domain(format!("Im zeta = {} is not positive", zeta.im)));
        }
        Ok(SiegelPoint { zeta, z })
    }

    pub fn from_parts(u: f64, v: f64, x: f64, y: f64) -> Result<SiegelPoint, MetricError> {
        SiegelPoint::new(Complex64::new(u, v), Complex64::new(x, y))
    }

    pub fn u(&self) -> f64 {
        self.zeta.re
    }

    pub fn v(&self) -> f64 {
        self.zeta.im
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }

    /// Real coordinates `(u, v, x, y)`.
    pub fn coords(&self) -> [f64; 4] {
        [self.u(), self.v(), self.x(), self.y()]
    }

    pub(crate) fn from_coords(c: [f64; 4]) -> SiegelPoint {
        SiegelPoint { zeta: Complex64::new(c[0], c[1]), z: Complex64::new(c[2], c[3]) }
    }
}

/// `η(δ, ε) = i∂∂̄(−δ log v² + ε y²/v)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MetricParams {
    pub delta: f64,
    pub epsilon: f64,
}

impl MetricParams {
    pub const BASE: MetricParams = MetricParams { delta: 1.0, epsilon: 1.0 };

    pub fn new(delta: f64, epsilon: f64) -> Result<MetricParams, MetricError> {
        if !(delta > 0.0 && epsilon > 0.0) {
            return Err(MetricError::Domain(format!("delta = {delta}, epsilon = {epsilon} must be positive")));
        }
        Ok(MetricParams { delta, epsilon })
    }
}

/// Coefficients of `(i/2)(A dζ∧dζ̄ + B dζ∧dz̄ + B̄ dz∧dζ̄ + C dz∧dz̄)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MetricComponents {
    pub a: f64,
    pub b: Complex64,
    pub c: f64,
}

impl MetricComponents {
    pub fn det(&self) -> f64 {
        self.a * self.c - self.b.norm_sqr()
    }

    pub fn is_positive(&self) -> bool {
        self.c > 0.0 && self.det() > 0.0
    }

    /// Hermitian matrix in the basis `(ζ, z)`.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a.into(), self.b], [self.b.conj(), self.c.into()]]
    }

    pub fn distance(&self, o: &MetricComponents) -> f64 {
        ((self.a - o.a).powi(2) + 2.0 * (self.b - o.b).norm_sqr() + (self.c - o.c).powi(2)).sqrt()
    }
}
