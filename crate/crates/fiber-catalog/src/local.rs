use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::catalog::{fiber_constants, DpRule, Order};
use crate::{monodromy_representative, CatalogError, FiberKind, Sl2z};

const POLE_EPS: f64 = 1e-12;

/// Local model of a fiber germ: its kind and the order `d_p` of J at the
/// point. `omega0` is the period at the center for regular and I0* germs;
/// `mu` is μ_p there (1, 2 or 3 according to J(p)).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocalModel {
    pub kind: FiberKind,
    pub d_p: u32,
    #[serde(skip)]
    pub omega0: Complex64,
    pub mu: u32,
}

impl LocalModel {
    pub fn new(kind: FiberKind, d_p: u32) -> LocalModel {
        LocalModel { kind, d_p, omega0: Complex64::i(), mu: 1 }
    }

    pub fn with_omega0(mut self, omega0: Complex64) -> LocalModel {
        self.omega0 = omega0;
        self
    }

    pub fn with_mu(mut self, mu: u32) -> LocalModel {
        self.mu = mu;
        self
    }

    /// μ_p in effect for this germ.
    pub fn mu_p(&self) -> Order {
        match fiber_constants(self.kind).d_p_rule {
            DpRule::MultipleOfMu => Order::Finite(self.mu),
            _ => fiber_constants(self.kind).mu_p,
        }
    }

    fn finite_order(&self) -> Option<u32> {
        fiber_constants(self.kind).h_p.finite()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub ok: bool,
    pub diagnostic: Option<String>,
}

/// Whether `d_p` is admissible for the kind.
pub fn validate_order(m: &LocalModel) -> OrderCheck {
    let fail = |msg: String| OrderCheck { ok: false, diagnostic: Some(msg) };
    if m.d_p == 0 {
        return fail(format!("{} requires d_p >= 1", m.kind));
    }
    match fiber_constants(m.kind).d_p_rule {
        DpRule::Congruent { modulus: 2, residue: 1 } if m.d_p % 2 == 0 => {
            fail(format!("{} requires d_p odd", m.kind))
        }
        DpRule::Congruent { modulus, residue } if m.d_p % modulus != residue => {
            fail(format!("{} requires d_p ≡ {residue} mod {modulus}", m.kind))
        }
        DpRule::MultipleOfMu if !(1..=3).contains(&m.mu) => {
            fail(format!("{} has mu = {}, expected 1, 2 or 3", m.kind, m.mu))
        }
        DpRule::MultipleOfMu if m.d_p % m.mu != 0 => {
            fail(format!("{} requires d_p ≡ 0 mod {}", m.kind, m.mu))
        }
        DpRule::EqualsB { b } if m.d_p != b => {
            fail(format!("{} requires d_p = {b} (pole order)", m.kind))
        }
        _ => OrderCheck { ok: true, diagnostic: None },
    }
}

fn eta() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// Local period ω_p. For I_b and I*_b the argument is ζ in the upper half
/// plane and the value is `d_p ζ`; for the other kinds it is the disk
/// coordinate τ with `|τ| < 1`.
pub fn local_period(m: &LocalModel, tau: Complex64) -> Result<Complex64, CatalogError> {
    use FiberKind::*;
    let check = validate_order(m);
    if !check.ok {
        return Err(CatalogError::OutOfDomain(check.diagnostic.unwrap_or_default()));
    }
    let d = m.d_p;
    if !m.kind.is_multiplicative() && tau.norm() >= 1.0 {
        return Err(CatalogError::OutOfDomain(format!("|tau| = {} >= 1", tau.norm())));
    }
    let rational = |s: Complex64, num: Complex64, den: Complex64| {
        if (Complex64::new(1.0, 0.0) - s).norm() < POLE_EPS {
            return Err(CatalogError::OutOfDomain("pole of the local period".into()));
        }
        Ok(num / den)
    };
    let one = Complex64::new(1.0, 0.0);
    let w = match m.kind {
        Regular => tau.powu(d / m.mu) + m.omega0,
        IStar(0) => tau.powu(2 * d / m.mu) + m.omega0,
        I(_) | IStar(_) => tau * d as f64,
        II | IIStar => {
            let s = tau.powu(2 * d);
            rational(s, eta() - eta() * eta() * s, one - s)?
        }
        IV | IVStar => {
            let s = tau.powu(d);
            rational(s, eta() - eta() * eta() * s, one - s)?
        }
        III | IIIStar => {
            let s = tau.powu(2 * d);
            rational(s, Complex64::i() * (one + s), one - s)?
        }
    };
    if !(w.im > 0.0) {
        return Err(CatalogError::OutOfDomain(format!("period {w} not in the upper half plane")));
    }
    Ok(w)
}

fn step(m: &LocalModel, h: u32, rho: &Sl2z, tau: Complex64, z: Complex64, forward: bool)
    -> Result<(Complex64, Complex64), CatalogError> {
    let e = Complex64::from_polar(1.0, 2.0 * PI / h as f64);
    if forward {
        let j = rho.automorphy(local_period(m, tau)?);
        Ok((e * tau, z / j))
    } else {
        let t = tau / e;
        let j = rho.automorphy(local_period(m, t)?);
        Ok((t, z * j))
    }
}

/// Apply the generator g_p of the local cyclic group `k` times (k may be
/// negative). For I_b and I*_b the generator is the deck translation
/// `ζ -> ζ + 1`.
pub fn local_action(m: &LocalModel, k: i64, point: (Complex64, Complex64))
    -> Result<(Complex64, Complex64), CatalogError> {
    let (tau, z) = point;
    match m.kind {
        FiberKind::I(_) => return Ok((tau + k as f64, z)),
        FiberKind::IStar(b) if b >= 1 => {
            let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            return Ok((tau + k as f64, z * sign));
        }
        _ => {}
    }
    let h = m.finite_order().expect("finite monodromy kinds have finite order");
    let rho = monodromy_representative(m.kind);
    let mut p = (tau, z);
    for _ in 0..k.unsigned_abs() {
        p = step(m, h, &rho, p.0, p.1, k > 0)?;
    }
    Ok(p)
}

/// `|ω(e_h τ) − ρ·ω(τ)|` for a kind with finite monodromy.
pub fn equivariance_residual(m: &LocalModel, tau: Complex64) -> Result<f64, CatalogError> {
    let h = m
        .finite_order()
        .ok_or_else(|| CatalogError::OutOfDomain(format!("{} has infinite monodromy", m.kind)))?;
    let e = Complex64::from_polar(1.0, 2.0 * PI / h as f64);
    let rho = monodromy_representative(m.kind);
    let lhs = local_period(m, e * tau)?;
    let rhs = rho.mobius(local_period(m, tau)?);
    Ok((lhs - rhs).norm())
}

/// Distance from `z1 − z2` to the lattice `Z + ω Z`.
pub fn lattice_residual(z1: Complex64, z2: Complex64, omega: Complex64) -> f64 {
    let diff = z1 - z2;
    let n = diff.im / omega.im;
    let m = diff.re - n * omega.re;
    let (fm, fn_) = (m - m.round(), n - n.round());
    (omega * fn_ + fm).norm()
}
