use std::cmp::Ordering;

use exact_core::{PiLinear, PiPoly, PiRatio, Rat};
use lattice_classes::SurfaceData;
use serde::Serialize;

use crate::FlowError;

/// Genus of the base, χ and deg J.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceScalars {
    pub g: u32,
    pub chi: i64,
    pub d: u32,
}

impl SurfaceScalars {
    pub fn new(g: u32, chi: i64, d: u32) -> Result<SurfaceScalars, FlowError> {
        if g == 0 {
            return Err(FlowError::GenusZero);
        }
        if chi <= 0 {
            return Err(FlowError::NonpositiveChi(chi));
        }
        if d == 0 {
            return Err(FlowError::ZeroDegree);
        }
        Ok(SurfaceScalars { g, chi, d })
    }

    pub fn from_surface(s: &SurfaceData) -> Result<SurfaceScalars, FlowError> {
        SurfaceScalars::new(s.genus, s.chi, s.jacobian_degree)
    }

    /// `2g − 2 + χ`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.g as i64 - 2 + self.chi
    }

    /// `πd/3`.
    pub fn pi_d_third(&self) -> PiLinear {
        PiLinear::pi_times(Rat::new(self.d as i64, 3).expect("nonzero"))
    }
}

/// Upper end of the admissible interval `(0, 1 + (2g−2)/χ)`.
pub fn t_interval(s: &SurfaceScalars) -> Result<(Rat, Rat), FlowError> {
    if s.chi <= 0 {
        return Err(FlowError::NonpositiveChi(s.chi));
    }
    let upper = Rat::one() + Rat::new(2 * s.g as i64 - 2, s.chi)?;
    Ok((Rat::zero(), upper))
}

/// `t₀ = (2g−2+χ)/(πd/3 + χ)`, kept as a quotient.
pub fn t_zero(s: &SurfaceScalars) -> PiRatio {
    let num = PiPoly::constant(Rat::int(s.canonical_degree()));
    let den = (&s.pi_d_third() + &PiLinear::int(s.chi)).to_poly();
    PiRatio::new(num, den).expect("πd/3 + χ is positive")
}

/// `t(ε) = ε(2g−2+χ)/(πd/3 + εχ)`.
pub fn t_of_epsilon(s: &SurfaceScalars, eps: &Rat) -> PiRatio {
    let num = PiPoly::constant(eps * &Rat::int(s.canonical_degree()));
    let den = (&s.pi_d_third() + &PiLinear::rational(eps * &Rat::int(s.chi))).to_poly();
    PiRatio::new(num, den).expect("positive denominator")
}

/// Inverse of [`t_of_epsilon`]: `ε(t) = tπd / (3(2g−2+χ(1−t)))`.
pub fn epsilon_of_t(s: &SurfaceScalars, t: &Rat) -> Result<PiRatio, FlowError> {
    let den = Rat::int(s.canonical_degree()) - &(t * &Rat::int(s.chi));
    let num = s.pi_d_third().scale(t).to_poly();
    Ok(PiRatio::new(num, PiPoly::constant(den))?)
}

fn check_interval(t: &Rat, s: &SurfaceScalars) -> Result<(), FlowError> {
    let (lo, hi) = t_interval(s)?;
    if t > &lo && t < &hi {
        Ok(())
    } else {
        Err(FlowError::OutOfInterval { t: t.to_string(), upper: hi.to_string() })
    }
}

/// Both curvature constants of `η(t)` and their ratio.
#[derive(Clone, Debug, Serialize)]
pub struct CurvatureReport {
    pub t: Rat,
    /// `−2πd/(2g−2+χ(1−t))`.
    pub printed: PiRatio,
    /// `−3ε/t` from `η(t) = (t/ε)η_X(ε)`, curvature −3 and fiber volume ε.
    pub derived: PiRatio,
    /// `printed / derived`.
    pub ratio: Rat,
    /// Which value the rest of the report relies on.
    pub convention: &'static str,
}

pub fn scalar_curvature_eta_t(t: &Rat, s: &SurfaceScalars) -> Result<CurvatureReport, FlowError> {
    check_interval(t, s)?;
    let den = Rat::int(s.canonical_degree()) - &(t * &Rat::int(s.chi));
    let printed = PiRatio::new(s.pi_d_third().scale(&Rat::int(-6)).to_poly(), PiPoly::constant(den))?;
    let eps = epsilon_of_t(s, t)?;
    let derived = eps.mul(&PiRatio::from_rat(Rat::int(-3))).div(&PiRatio::from_rat(t.clone()))?;
    let ratio = printed.div(&derived)?.to_rat().ok_or_else(|| {
        FlowError::Domain("printed and derived curvature are not proportional".into())
    })?;
    Ok(CurvatureReport { t: t.clone(), printed, derived, ratio, convention: "derived" })
}

/// Floating values `(printed, derived)` of the two curvature constants at a
/// real parameter `t`.
pub fn curvature_values(t: f64, s: &SurfaceScalars) -> Result<(f64, f64), FlowError> {
    let upper = t_interval(s)?.1.to_f64();
    if !(t > 0.0 && t < upper) {
        return Err(FlowError::OutOfInterval { t: t.to_string(), upper: upper.to_string() });
    }
    let den = s.canonical_degree() as f64 - s.chi as f64 * t;
    let pd = std::f64::consts::PI * s.d as f64;
    Ok((-2.0 * pd / den, -pd / den))
}

/// Signs of `t₀ − 0` and `t₀ − upper`, decided exactly.
pub fn t_zero_position(s: &SurfaceScalars) -> Result<(Ordering, Ordering), FlowError> {
    let t0 = t_zero(s);
    let (lo, hi) = t_interval(s)?;
    Ok((t0.cmp_exact(&PiRatio::from_rat(lo))?, t0.cmp_exact(&PiRatio::from_rat(hi))?))
}
