use std::f64::consts::PI;

use exact_core::{PiPoly, PiRatio, Rat};
use fiber_catalog::{fiber_constants, validate_order, FiberKind, LocalModel, Order};
use serde::Serialize;

use crate::{FlowError, SurfaceScalars};

/// Parameters `(δ(t), ε(t))` of the flow solution at time `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FlowState {
    pub delta: f64,
    pub epsilon: f64,
    pub t: f64,
}

/// `δ(t) = (δ₀ − 3/2)e^{−t} + 3/2`, `ε(t) = ε₀e^{−t}`.
pub fn krf_step(delta0: f64, eps0: f64, t: f64) -> Result<FlowState, FlowError> {
    if !(delta0 > 0.0 && eps0 > 0.0 && t >= 0.0) {
        return Err(FlowError::Domain(format!("delta0 = {delta0}, eps0 = {eps0}, t = {t}")));
    }
    let e = (-t).exp();
    Ok(FlowState { delta: (delta0 - 1.5) * e + 1.5, epsilon: eps0 * e, t })
}

/// `a(t) = (2g−2+χ) / ((πd/3)δ(t) + ε(t)χ)`; `t = ∞` gives the limit.
pub fn krf_a(t: f64, delta0: f64, eps0: f64, s: &SurfaceScalars) -> Result<f64, FlowError> {
    let (delta, eps) = if t == f64::INFINITY {
        (1.5, 0.0)
    } else {
        let st = krf_step(delta0, eps0, t)?;
        (st.delta, st.epsilon)
    };
    let den = PI * s.d as f64 / 3.0 * delta + eps * s.chi as f64;
    if !(den > 0.0) || !den.is_finite() {
        return Err(FlowError::DegenerateDenominator);
    }
    Ok(s.canonical_degree() as f64 / den)
}

/// `a(∞) = (2g−2+χ)/(πd/2)`.
pub fn krf_a_limit(s: &SurfaceScalars) -> PiRatio {
    let den = PiPoly::new(vec![Rat::zero(), Rat::new(s.d as i64, 2).expect("nonzero")]);
    PiRatio::new(PiPoly::constant(Rat::int(s.canonical_degree())), den).expect("d >= 1")
}

/// Class parameter `ε(t)a(t)` of `a(t)[ω(t)] = K_X + t'D_X`.
pub fn class_parameter(t: f64, delta0: f64, eps0: f64, s: &SurfaceScalars) -> Result<f64, FlowError> {
    Ok(krf_step(delta0, eps0, t)?.epsilon * krf_a(t, delta0, eps0, s)?)
}

/// `d_p/μ_p − 1 + δ_p`, with `d_p/∞ = 0`.
pub fn twisted_coefficient_for(m: &LocalModel) -> Result<Rat, FlowError> {
    let check = validate_order(m);
    if !check.ok {
        return Err(FlowError::BadOrder(check.diagnostic.unwrap_or_default()));
    }
    let first = match m.mu_p() {
        Order::Finite(mu) => Rat::new(m.d_p as i64, mu as i64)?,
        Order::Infinite => Rat::zero(),
    };
    Ok(first - Rat::one() + fiber_constants(m.kind).delta_p)
}

pub fn twisted_coefficient(kind: FiberKind, d_p: u32) -> Result<Rat, FlowError> {
    twisted_coefficient_for(&LocalModel::new(kind, d_p))
}

/// Coefficients of `η_J` in `ω_∞` and `ω_WP`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitMetrics {
    pub omega_inf_coeff: Rat,
    pub omega_wp_coeff: Rat,
}

impl LimitMetrics {
    pub fn ratio(&self) -> Rat {
        &self.omega_inf_coeff / &self.omega_wp_coeff
    }

    /// Coefficient of `η_J` in `−ω_∞ + ω_WP`; the balance needs −1.
    pub fn smooth_balance(&self) -> Rat {
        &self.omega_wp_coeff - &self.omega_inf_coeff
    }
}

pub fn limit_metrics(_d: u32) -> LimitMetrics {
    LimitMetrics {
        omega_inf_coeff: Rat::new(3, 2).expect("nonzero"),
        omega_wp_coeff: Rat::new(1, 2).expect("nonzero"),
    }
}
