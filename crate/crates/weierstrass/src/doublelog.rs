use std::f64::consts::PI;

use num_complex::Complex64;

use crate::SeriesError;

fn logs(tau: Complex64, w: Complex64) -> Result<(f64, f64), SeriesError> {
    let r = tau.norm();
    if !(r > 0.0 && r < 1.0) || w.norm() == 0.0 {
        return Err(SeriesError::Domain(format!("need 0 < |tau| < 1 and w != 0, got |tau| = {r}")));
    }
    Ok((r.ln(), w.norm().ln()))
}

/// `−(log|w|)²/(2πb log|τ|)`.
pub fn double_log_cross_term(b: u32, tau: Complex64, w: Complex64) -> Result<f64, SeriesError> {
    if b == 0 {
        return Err(SeriesError::Domain("b must be at least 1".into()));
    }
    let (lt, lw) = logs(tau, w)?;
    Ok(-lw * lw / (2.0 * PI * b as f64 * lt))
}

/// `−log((log|τ|)²) − (log|w|)²/(2πb log|τ|)`.
pub fn double_log_potential(b: u32, tau: Complex64, w: Complex64) -> Result<f64, SeriesError> {
    let cross = double_log_cross_term(b, tau, w)?;
    let (lt, _) = logs(tau, w)?;
    Ok(-(lt * lt).ln() + cross)
}
