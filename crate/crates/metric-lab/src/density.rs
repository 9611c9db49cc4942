use num_complex::Complex64;

use crate::{FiniteDiff, MetricError};

fn upper(xi: Complex64) -> Result<(), MetricError> {
    if xi.im > 0.0 {
        Ok(())
    } else {
        Err(MetricError::Domain(format!("{xi} is not in the upper half plane")))
    }
}

/// Poincaré density `1/(Im ξ)²`.
pub fn hyperbolic_density(xi: Complex64) -> Result<f64, MetricError> {
    upper(xi)?;
    Ok(1.0 / (xi.im * xi.im))
}

/// `|ω′(ξ)|² / (Im ω(ξ))²` for a holomorphic map into H⁺.
pub fn pullback_density<F>(omega: F, xi: Complex64, fd: &FiniteDiff) -> Result<f64, MetricError>
where
    F: Fn(Complex64) -> Complex64,
{
    let w = omega(xi);
    upper(w)?;
    let d = fd.derivative(&omega, xi);
    Ok(d.norm_sqr() / (w.im * w.im))
}

/// Ricci density `−Δ log g / 2` of `(i/2) g dξ∧dξ̄`.
pub fn ricci_density<F>(g: F, xi: Complex64, fd: &FiniteDiff) -> Result<f64, MetricError>
where
    F: Fn(Complex64) -> f64,
{
    upper(xi - Complex64::new(0.0, 2.0 * fd.h))?;
    let log_g = |p: Complex64| g(p).ln();
    Ok(-fd.laplacian(&log_g, xi) / 2.0)
}

/// `Ric(ω_∞) + ω_∞ − ω_WP` at ξ with `ω_∞ = (3/2)η₋₁`, `ω_WP = (1/2)η₋₁`.
pub fn limit_balance_residual(xi: Complex64, fd: &FiniteDiff) -> Result<f64, MetricError> {
    let inf = |p: Complex64| 1.5 / (p.im * p.im);
    let hyp = hyperbolic_density(xi)?;
    Ok(ricci_density(inf, xi, fd)? + 1.5 * hyp - 0.5 * hyp)
}
