use std::collections::BTreeMap;

use exact_core::{mat_inverse, solve_symmetric_pi, IntSymMatrix, PiLinear, Rat};

use crate::{compute_np, ComponentKey, DivisorClass, LatticeError, LinearForm, SectionData, SurfaceData};

/// Symbol standing for the unknown intersection number `[η_X]·ψ(name)`.
pub fn essential_symbol(name: &str) -> String {
    format!("eta.psi({name})")
}

fn psi_key(name: &str) -> String {
    format!("psi({name})")
}

/// Trivial part `T_X = a[s] + b[F]` of the semi-flat class, determined by
/// `[η]·[s] = πd/3` and `[η]·[F] = 1` through the Gram matrix of `[s], [F]`.
pub fn trivial_class_t(d: u32, chi: i64) -> DivisorClass {
    let gram = IntSymMatrix::new(&[vec![-chi, 1], vec![1, 0]]).expect("symmetric");
    let rhs = [PiLinear::pi_times(Rat::new(d as i64, 3).expect("nonzero")), PiLinear::int(1)];
    let x = solve_symmetric_pi(&gram, &rhs).expect("Gram matrix of [s], [F] has determinant -1");
    DivisorClass { s: x[0].clone(), f: x[1].clone(), ..DivisorClass::default() }
}

/// `K_X = (2g − 2 + χ)[F]`.
pub fn canonical_class(g: u32, chi: i64) -> DivisorClass {
    DivisorClass::fiber(PiLinear::int(2 * g as i64 - 2 + chi))
}

/// `ψ(s_i) = [s_i] − [s] − (s_i·s + χ)[F]`.
pub fn shioda_image(sec: &SectionData, chi: i64) -> DivisorClass {
    let mut out = DivisorClass {
        s: PiLinear::int(-1),
        f: PiLinear::int(-(sec.dot_zero + chi)),
        ..DivisorClass::default()
    };
    out.add_essential(&sec.name, &LinearForm::constant(PiLinear::int(1)));
    out
}

/// `ψ(s_i)·ψ(s_j)` for sections in MW0: `−(χ + s_i·s + s_j·s − s_i·s_j)` off
/// the diagonal and `−(2χ + 2 s_i·s)` on it.
pub fn shioda_pairing(si: &SectionData, sj: &SectionData, chi: i64) -> Result<Rat, LatticeError> {
    for s in [si, sj] {
        if !s.in_mw0 {
            return Err(LatticeError::NotInMW0(s.name.clone()));
        }
    }
    if si.name == sj.name {
        return Ok(Rat::int(-(2 * chi + 2 * si.dot_zero)));
    }
    let sij = si
        .dot_sections
        .get(&sj.name)
        .or_else(|| sj.dot_sections.get(&si.name))
        .ok_or_else(|| LatticeError::MissingIntersection(si.name.clone(), sj.name.clone()))?;
    Ok(Rat::int(-(chi + si.dot_zero + sj.dot_zero - sij)))
}

fn n_sum(surf: &SurfaceData) -> Result<DivisorClass, LatticeError> {
    let mut out = DivisorClass::zero();
    for (p, fiber) in surf.fibers.iter().enumerate() {
        for (i, c) in compute_np(fiber.kind)?.into_iter().enumerate() {
            out.add_component(ComponentKey { fiber: p, index: i + 1 }, &PiLinear::rational(c));
        }
    }
    Ok(out)
}

/// Essential part `E_X = Σ c_i ψ(s_i)` with `E c = ([η]·ψ(s_j))_j`, `E` the
/// Shioda Gram matrix. Unknown right-hand sides stay symbolic.
fn essential_part(
    surf: &SurfaceData,
    inputs: Option<&BTreeMap<String, PiLinear>>,
) -> Result<DivisorClass, LatticeError> {
    let secs = &surf.sections;
    let mut out = DivisorClass::zero();
    if secs.is_empty() {
        return Ok(out);
    }
    let r = secs.len();
    let mut gram = IntSymMatrix::zeros(r);
    for i in 0..r {
        for j in i..r {
            let v = shioda_pairing(&secs[i], &secs[j], surf.chi)?;
            let v = i64::try_from(v.numer().clone()).expect("pairing of machine-size data");
            gram.set_sym(i, j, v);
        }
    }
    let inv = mat_inverse(&gram)?;
    let values: BTreeMap<String, PiLinear> = inputs
        .map(|m| m.iter().map(|(k, v)| (essential_symbol(k), v.clone())).collect())
        .unwrap_or_default();
    for i in 0..r {
        let mut form = LinearForm::default();
        for j in 0..r {
            let sym = LinearForm::symbol(&essential_symbol(&secs[j].name), PiLinear::int(1));
            form = form.add(&sym.scale(inv.get(i, j)));
        }
        out.add_essential(&psi_key(&secs[i].name), &form.substitute(&values)?);
    }
    Ok(out)
}

/// `[η_X] = T_X + Σ_p N_p + E_X`.
pub fn assemble_eta_class(
    surf: &SurfaceData,
    essential_inputs: Option<&BTreeMap<String, PiLinear>>,
) -> Result<DivisorClass, LatticeError> {
    let t = trivial_class_t(surf.jacobian_degree, surf.chi);
    Ok(t.add(&n_sum(surf)?).add(&essential_part(surf, essential_inputs)?))
}

/// `D_X = [s] + Σ_p N_p + E_X`.
pub fn class_d_x(surf: &SurfaceData) -> Result<DivisorClass, LatticeError> {
    let s = DivisorClass { s: PiLinear::int(1), ..DivisorClass::default() };
    Ok(s.add(&n_sum(surf)?).add(&essential_part(surf, None)?))
}

/// `[η_X(ε)] = (πd/3)[F] + ε(D_X + χ[F])`.
pub fn eta_epsilon_class(surf: &SurfaceData, eps: &Rat) -> Result<DivisorClass, LatticeError> {
    if !eps.is_positive() {
        return Err(LatticeError::NonpositiveEpsilon);
    }
    let base = DivisorClass::fiber(PiLinear::pi_times(Rat::new(surf.jacobian_degree as i64, 3)?));
    let d_x = class_d_x(surf)?.add(&DivisorClass::fiber(PiLinear::int(surf.chi)));
    Ok(base.add(&d_x.scale(eps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fiber_catalog::FiberKind;

    fn q(p: i64, d: i64) -> Rat {
        Rat::new(p, d).unwrap()
    }

    fn section(name: &str, dot_zero: i64, others: &[(&str, i64)], in_mw0: bool) -> SectionData {
        SectionData {
            name: name.into(),
            dot_zero,
            dot_sections: others.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            in_mw0,
        }
    }

    #[test]
    fn trivial_class_examples() {
        let t = trivial_class_t(12, 1);
        assert_eq!((t.s, t.f), (PiLinear::int(1), PiLinear::new(q(1, 1), q(4, 1))));
        let t = trivial_class_t(3, 0);
        assert_eq!(t.f, PiLinear::pi_times(q(1, 1)));
        let t = trivial_class_t(6, 2);
        assert_eq!(t.f, PiLinear::new(q(2, 1), q(2, 1)));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_class(2, 1).f, PiLinear::int(3));
        assert!(canonical_class(1, 0).is_zero());
        assert!(canonical_class(0, 2).is_zero());
    }

    #[test]
    fn shioda_examples() {
        let a = shioda_image(&section("s1", 0, &[], true), 1);
        assert_eq!((a.s.clone(), a.f.clone()), (PiLinear::int(-1), PiLinear::int(-1)));
        assert_eq!(a.essential["s1"], LinearForm::constant(PiLinear::int(1)));
        assert_eq!(shioda_image(&section("s1", 2, &[], true), 1).f, PiLinear::int(-3));
        assert!(shioda_image(&section("s1", 0, &[], true), 0).f.is_zero());

        let s1 = section("s1", 0, &[("s2", 0)], true);
        let s2 = section("s2", 0, &[("s1", 0)], true);
        assert_eq!(shioda_pairing(&s1, &s1, 1).unwrap(), q(-2, 1));
        assert_eq!(shioda_pairing(&s1, &s2, 1).unwrap(), q(-1, 1));
        let s3 = section("s3", 1, &[("s4", 2)], true);
        let s4 = section("s4", 0, &[], true);
        assert_eq!(shioda_pairing(&s3, &s4, 1).unwrap(), q(0, 1));
        let bad = section("s5", 0, &[], false);
        assert_eq!(shioda_pairing(&bad, &s1, 1), Err(LatticeError::NotInMW0("s5".into())));
    }

    #[test]
    fn assembled_examples() {
        let s = SurfaceData::new(2, 1, 2).with_fiber(FiberKind::I(2), 2);
        let eta = assemble_eta_class(&s, None).unwrap();
        assert_eq!(eta.f, PiLinear::new(q(1, 1), q(2, 3)));
        assert_eq!(eta.components[&ComponentKey { fiber: 0, index: 1 }], PiLinear::rational(q(-1, 4)));

        let plain = SurfaceData::new(1, 0, 3);
        let eta = assemble_eta_class(&plain, None).unwrap();
        assert_eq!((eta.s, eta.f), (PiLinear::int(1), PiLinear::pi_times(q(1, 1))));

        let d = class_d_x(&SurfaceData::new(1, 1, 1).with_fiber(FiberKind::III, 1)).unwrap();
        assert_eq!(d.s, PiLinear::int(1));
        assert!(d.f.is_zero());
        assert_eq!(d.components.values().next().unwrap(), &PiLinear::rational(q(-1, 4)));
    }

    #[test]
    fn epsilon_class_substitution() {
        let s = SurfaceData::new(1, 2, 6);
        let c = eta_epsilon_class(&s, &q(1, 2)).unwrap();
        assert_eq!(c.s, PiLinear::rational(q(1, 2)));
        assert_eq!(c.f, PiLinear::new(q(1, 1), q(2, 1)));
        assert_eq!(eta_epsilon_class(&s, &q(0, 1)), Err(LatticeError::NonpositiveEpsilon));
    }

    #[test]
    fn essential_part_stays_symbolic() {
        let s = SurfaceData::new(1, 1, 12)
            .with_section(section("P", 0, &[], true));
        let eta = assemble_eta_class(&s, None).unwrap();
        let form = &eta.essential["psi(P)"];
        assert_eq!(form.symbols["eta.psi(P)"], PiLinear::rational(q(-1, 2)));
        let mut inputs = BTreeMap::new();
        inputs.insert("P".to_string(), PiLinear::int(4));
        let eta = assemble_eta_class(&s, Some(&inputs)).unwrap();
        assert_eq!(eta.essential["psi(P)"], LinearForm::constant(PiLinear::int(-2)));
    }
}
