use exact_core::{PiLinear, Rat};
use lattice_classes::{canonical_class, class_d_x, eta_epsilon_class, DivisorClass, SurfaceData};
use serde::Serialize;

use crate::{t_of_epsilon, FlowError, SurfaceScalars};

/// Both sides of `(2g−2+χ)[η_X(ε)] = (πd/3 + εχ)K_X + ε(2g−2+χ)D_X`, the
/// series identity with the denominator of `t(ε)` cleared.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesIdentity {
    pub epsilon: Rat,
    pub t: exact_core::PiRatio,
    pub lhs: DivisorClass,
    pub rhs: DivisorClass,
    pub holds: bool,
}

pub fn series_identity(surf: &SurfaceData, eps: &Rat) -> Result<SeriesIdentity, FlowError> {
    let s = SurfaceScalars::from_surface(surf)?;
    let k = Rat::int(s.canonical_degree());
    let lhs = eta_epsilon_class(surf, eps)?.scale(&k);
    let clear = &s.pi_d_third() + &PiLinear::rational(eps * &Rat::int(s.chi));
    let rhs = canonical_class(s.g, s.chi)
        .scale_pi(&clear)?
        .add(&class_d_x(surf)?.scale(&(eps * &k)));
    let holds = lhs == rhs;
    Ok(SeriesIdentity { epsilon: eps.clone(), t: t_of_epsilon(&s, eps), lhs, rhs, holds })
}
