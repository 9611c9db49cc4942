use std::f64::consts::PI;

use num_complex::Complex64;

use crate::SeriesError;

/// `j(τ)/1728 = E₄³/(1728 Δ)` from truncated q-expansions, so that `j(i) = 1`
/// and `j(e^{2πi/3}) = 0`.
pub fn j_normalized(tau: Complex64, terms: usize) -> Result<Complex64, SeriesError> {
    if !(tau.im > 0.05) {
        return Err(SeriesError::ConvergenceGuard(format!("Im tau = {} <= 0.05", tau.im)));
    }
    if terms == 0 {
        return Err(SeriesError::ConvergenceGuard("no terms".into()));
    }
    let q = (Complex64::i() * 2.0 * PI * tau).exp();
    let one = Complex64::new(1.0, 0.0);
    let mut e4 = Complex64::new(0.0, 0.0);
    let mut prod = one;
    let mut qn = one;
    for n in 1..=terms {
        qn *= q;
        let nf = n as f64;
        e4 += qn * nf.powi(3) / (one - qn);
        prod *= (one - qn).powu(24);
    }
    let e4 = one + e4 * 240.0;
    Ok(e4.powu(3) / (q * prod * 1728.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_values() {
        assert!((j_normalized(Complex64::i(), 40).unwrap() - 1.0).norm() < 1e-8);
        let rho = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        assert!(j_normalized(rho, 40).unwrap().norm() < 1e-8);
        assert!(j_normalized(Complex64::new(0.0, 5.0), 20).unwrap().norm() > 1e10);
        assert!(j_normalized(Complex64::new(0.0, 0.01), 20).is_err());
    }
}
