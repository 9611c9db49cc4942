use fiber_catalog::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FINITE: [FiberKind; 6] = [
    FiberKind::II,
    FiberKind::IIStar,
    FiberKind::III,
    FiberKind::IIIStar,
    FiberKind::IV,
    FiberKind::IVStar,
];

fn admissible_orders(kind: FiberKind) -> Vec<u32> {
    (1..12).filter(|&d| validate_order(&LocalModel::new(kind, d)).ok).take(3).collect()
}

fn disk_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

#[test]
fn representatives_round_trip() {
    for kind in FiberKind::all(1..=6) {
        let m = monodromy_representative(kind);
        assert_eq!(m.det(), 1, "{kind}");
        assert_eq!(classify_monodromy(&m).unwrap(), kind);
    }
}

#[test]
fn classification_is_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut conjugators = Vec::new();
    while conjugators.len() < 50 {
        let (a, b, c, d) = (
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
        );
        if let Ok(q) = Sl2z::new(a, b, c, d) {
            conjugators.push(q);
        }
    }
    for kind in FiberKind::all(1..=6) {
        let m = monodromy_representative(kind);
        for q in &conjugators {
            let conj = q.mul(&m).mul(&q.inverse());
            assert_eq!(classify_monodromy(&conj).unwrap(), kind, "{kind} under {q:?}");
        }
    }
}

#[test]
fn elliptic_orders() {
    for kind in FINITE {
        let h = fiber_constants(kind).h_p.finite().unwrap();
        let m = monodromy_representative(kind);
        assert_eq!(m.pow(h), Sl2z::IDENTITY, "{kind}");
        assert!((1..h).all(|k| m.pow(k) != Sl2z::IDENTITY));
    }
}

#[test]
fn local_periods_are_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in FINITE {
        for d in admissible_orders(kind) {
            let m = LocalModel::new(kind, d);
            for _ in 0..20 {
                let tau = disk_point(&mut rng, 0.3);
                let r = equivariance_residual(&m, tau).unwrap();
                assert!(r < 1e-12, "{kind} d={d} tau={tau} residual {r:e}");
            }
        }
    }
}

#[test]
fn inverse_monodromy_is_not_equivariant() {
    // The relation singles out ρ, not ρ⁻¹, except for the involutive III/III*
    // classes in PSL2.
    let tau = Complex64::new(0.2, 0.1);
    for kind in [FiberKind::II, FiberKind::IV, FiberKind::IIStar, FiberKind::IVStar] {
        let m = LocalModel::new(kind, admissible_orders(kind)[0]);
        let h = fiber_constants(kind).h_p.finite().unwrap();
        let e = Complex64::from_polar(1.0, std::f64::consts::TAU / h as f64);
        let inv = monodromy_representative(kind).inverse();
        let r = (local_period(&m, e * tau).unwrap() - inv.mobius(local_period(&m, tau).unwrap())).norm();
        assert!(r > 1e-3, "{kind}");
    }
}

#[test]
fn generator_has_order_h_modulo_lattice() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut kinds = FINITE.to_vec();
    kinds.extend([FiberKind::IStar(0), FiberKind::Regular]);
    for kind in kinds {
        let h = fiber_constants(kind).h_p.finite().unwrap();
        for d in admissible_orders(kind) {
            let m = LocalModel::new(kind, d).with_omega0(Complex64::new(0.3, 1.2));
            for _ in 0..20 {
                let tau = disk_point(&mut rng, 0.3);
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let (t2, z2) = local_action(&m, h as i64, (tau, z)).unwrap();
                assert!((t2 - tau).norm() < 1e-12);
                let w = local_period(&m, tau).unwrap();
                let r = lattice_residual(z2, z, w);
                assert!(r < 1e-10, "{kind} d={d}: {r:e}");
            }
        }
    }
}

#[test]
fn multiplicative_actions() {
    let z = Complex64::new(0.3, 0.7);
    let zeta = Complex64::new(0.1, 2.0);
    let ib = LocalModel::new(FiberKind::I(3), 3);
    assert_eq!(local_action(&ib, 2, (zeta, z)).unwrap(), (zeta + 2.0, z));
    let ibs = LocalModel::new(FiberKind::IStar(2), 2);
    assert_eq!(local_action(&ibs, 3, (zeta, z)).unwrap(), (zeta + 3.0, -z));
    assert_eq!(local_action(&ibs, -2, (zeta, z)).unwrap(), (zeta - 2.0, z));
}

#[test]
fn periods_stay_in_upper_half_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for kind in FINITE {
        for d in admissible_orders(kind) {
            let m = LocalModel::new(kind, d);
            for _ in 0..100 {
                let tau = disk_point(&mut rng, 0.3);
                assert!(local_period(&m, tau).unwrap().im > 0.0);
            }
        }
    }
}

// Adjacency of the identity component Θ0 to Θ1, Θ2, ...
fn theta0_row(kind: FiberKind) -> Vec<i64> {
    let n = intersection_matrix(kind).size();
    let mut row = vec![0; n];
    match kind {
        FiberKind::I(b) if b >= 2 => {
            row[0] += 1;
            row[n - 1] += 1;
        }
        FiberKind::IStar(_) => row[3] = 1,
        FiberKind::III => row[0] = 2,
        FiberKind::IV => row.iter_mut().for_each(|x| *x = 1),
        FiberKind::IVStar | FiberKind::IIIStar | FiberKind::IIStar => row[0] = 1,
        _ => {}
    }
    row
}

#[test]
fn fiber_class_is_orthogonal_to_components() {
    for kind in FiberKind::all(1..=8) {
        let r = intersection_matrix(kind);
        let n = r.size();
        let mult = fiber_constants(kind).component_multiplicities;
        assert_eq!(mult.len(), n + 1, "{kind}");
        let t0 = theta0_row(kind);
        for i in 0..n {
            let mut dot = mult[0] as i64 * t0[i];
            for j in 0..n {
                dot += mult[j + 1] as i64 * i64::try_from(r.get(i, j).clone()).unwrap();
            }
            assert_eq!(dot, 0, "{kind}: F.Theta_{}", i + 1);
        }
    }
}

#[test]
fn euler_numbers_match_component_count() {
    for kind in FiberKind::all(1..=8) {
        let c = fiber_constants(kind);
        let comps = c.component_multiplicities.len() as u32;
        let expect = match kind {
            FiberKind::Regular => 0,
            FiberKind::I(b) => b,
            _ => comps + 1,
        };
        assert_eq!(c.euler_e, expect, "{kind}");
    }
}

#[test]
fn kinds_are_negative_definite() {
    for kind in FiberKind::all(1..=8) {
        let r = intersection_matrix(kind);
        let n = r.size();
        // Leading principal minors alternate in sign.
        for k in 1..=n {
            let rows: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| i64::try_from(r.get(i, j).clone()).unwrap()).collect())
                .collect();
            let det = exact_core::IntSymMatrix::new(&rows).unwrap().det();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert!(det * sign > 0.into(), "{kind} minor {k}");
        }
    }
}

proptest::proptest! {
    #[test]
    fn equivariance_holds_anywhere_in_the_disk(
        k in 0usize..6,
        d in 1u32..12,
        r in 0.0f64..0.6,
        theta in 0.0f64..std::f64::consts::TAU,
    ) {
        let m = LocalModel::new(FINITE[k], d);
        proptest::prop_assume!(validate_order(&m).ok);
        let tau = Complex64::from_polar(r, theta);
        proptest::prop_assert!(equivariance_residual(&m, tau).unwrap() < 1e-11);
    }
}
