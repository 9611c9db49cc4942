use std::cmp::Ordering;
use std::f64::consts::PI;

use exact_core::{PiPoly, PiRatio, Rat};
use fiber_catalog::{FiberKind, LocalModel};
use flow_calculator::*;
use lattice_classes::{SectionData, SurfaceData};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(p: i64, d: i64) -> Rat {
    Rat::new(p, d).unwrap()
}

fn scalars() -> impl Strategy<Value = SurfaceScalars> {
    (1u32..6, 1i64..6, 1u32..40).prop_map(|(g, chi, d)| SurfaceScalars::new(g, chi, d).unwrap())
}

// −πd/(2g−2+χ(1−t)), written out directly.
fn derived_closed_form(s: &SurfaceScalars, t: &Rat) -> PiRatio {
    let den = Rat::int(2 * s.g as i64 - 2 + s.chi) - t * &Rat::int(s.chi);
    PiRatio::new(PiPoly::new(vec![q(0, 1), Rat::int(-(s.d as i64))]), PiPoly::constant(den)).unwrap()
}

proptest! {
    #[test]
    fn semigroup(d0 in 0.1f64..4.0, e0 in 0.1f64..4.0, t1 in 0.0f64..5.0, t2 in 0.0f64..5.0) {
        let a = krf_step(d0, e0, t1).unwrap();
        let b = krf_step(a.delta, a.epsilon, t2).unwrap();
        let c = krf_step(d0, e0, t1 + t2).unwrap();
        prop_assert!((b.delta - c.delta).abs() < 1e-12 && (b.epsilon - c.epsilon).abs() < 1e-12);
    }

    #[test]
    fn curvature_branches(s in scalars(), num in 1i64..200) {
        let upper = t_interval(&s).unwrap().1;
        let t = &upper * &q(num, 201);
        let r = scalar_curvature_eta_t(&t, &s).unwrap();
        prop_assert!(r.derived.eq_exact(&derived_closed_form(&s, &t)));
        prop_assert_eq!(r.ratio, q(2, 1));
        prop_assert_eq!(r.derived.signum().unwrap(), Ordering::Less);
    }

    #[test]
    fn t_zero_inside_interval(s in scalars()) {
        prop_assert_eq!(t_zero_position(&s).unwrap(), (Ordering::Greater, Ordering::Less));
        // With π > 3: t₀ < (2g−2+χ)/(d+χ) ≤ upper needs only d > 0.
        let k = s.canonical_degree();
        prop_assert!(k * s.chi < (s.d as i64 + s.chi) * k);
    }

    #[test]
    fn epsilon_round_trip(s in scalars(), p in 1i64..50, d in 1i64..50) {
        let eps = q(p, d);
        let t = t_of_epsilon(&s, &eps);
        prop_assert!(t.num.degree() == Some(0));
        let upper = t_interval(&s).unwrap().1;
        prop_assert_eq!(t.cmp_exact(&PiRatio::from_rat(upper)).unwrap(), Ordering::Less);
    }
}

#[test]
fn derived_curvature_at_t_zero() {
    for (g, chi, d) in [(1, 1, 12), (2, 1, 3), (3, 2, 7), (1, 4, 1)] {
        let s = SurfaceScalars::new(g, chi, d).unwrap();
        let t0 = t_zero(&s);
        // −πd / (k − χ t₀) with t₀ = N/D is −πd D / (k D − χ N).
        let k = PiPoly::constant(Rat::int(s.canonical_degree()));
        let chi_n = t0.num.scale(&Rat::int(chi));
        let den = &(&k * &t0.den) - &chi_n;
        let num = &PiPoly::new(vec![q(0, 1), Rat::int(-(d as i64))]) * &t0.den;
        let derived = PiRatio::new(num, den).unwrap();
        let minus_three_over_t0 = PiRatio::from_rat(q(-3, 1)).div(&t0).unwrap();
        assert!(derived.eq_exact(&minus_three_over_t0));
        let printed = derived.mul(&PiRatio::from_rat(q(2, 1)));
        assert!(printed.eq_exact(&PiRatio::from_rat(q(-6, 1)).div(&t0).unwrap()));
    }
}

#[test]
fn fiber_volume_law_is_exact() {
    let s = SurfaceScalars::new(2, 1, 12).unwrap();
    for t in [q(1, 3), q(1, 1), q(5, 2)] {
        let eps = epsilon_of_t(&s, &t).unwrap();
        let scale = PiRatio::from_rat(t.clone()).div(&eps).unwrap();
        assert_eq!(scale.mul(&eps).to_rat(), Some(t));
    }
}

#[test]
fn monotone_on_grid() {
    for (d0, e0) in [(0.5, 1.0), (1.0, 2.0), (1.5, 0.3), (3.0, 1.0)] {
        let mut prev = krf_step(d0, e0, 0.0).unwrap();
        for i in 1..=400 {
            let st = krf_step(d0, e0, i as f64 * 0.05).unwrap();
            assert!(st.epsilon < prev.epsilon);
            assert!((st.delta - 1.5).abs() <= (prev.delta - 1.5).abs());
            let (lo, hi) = (d0.min(1.5), d0.max(1.5));
            assert!(st.delta >= lo && st.delta <= hi);
            prev = st;
        }
    }
}

#[test]
fn a_reaches_its_limit() {
    for (g, chi, d) in [(2, 1, 2), (1, 3, 5), (4, 2, 9)] {
        let s = SurfaceScalars::new(g, chi, d).unwrap();
        let lim = krf_a_limit(&s);
        let expect = (2.0 * g as f64 - 2.0 + chi as f64) / (PI * d as f64 / 2.0);
        assert!((lim.to_f64() - expect).abs() < 1e-14);
        assert!((krf_a(f64::INFINITY, 0.8, 1.2, &s).unwrap() - expect).abs() < 1e-14);
        assert!((krf_a(40.0, 0.8, 1.2, &s).unwrap() - expect).abs() < 1e-12);
    }
}

#[test]
fn class_parameter_at_the_start() {
    let s = SurfaceScalars::new(2, 3, 4).unwrap();
    for e0 in [0.25, 1.0, 3.0] {
        let direct = class_parameter(0.0, 1.0, e0, &s).unwrap();
        let eps = Rat::new((e0 * 4.0) as i64, 4).unwrap();
        assert!((direct - t_of_epsilon(&s, &eps).to_f64()).abs() < 1e-10);
    }
}

#[test]
fn twisted_coefficients_match_table() {
    let cases = [
        (FiberKind::II, 1, q(-1, 2)),
        (FiberKind::II, 4, q(1, 2)),
        (FiberKind::IIStar, 2, q(1, 2)),
        (FiberKind::III, 3, q(3, 4)),
        (FiberKind::IIIStar, 1, q(1, 4)),
        (FiberKind::IV, 2, q(0, 1)),
        (FiberKind::IVStar, 1, q(0, 1)),
        (FiberKind::I(3), 3, q(-1, 1)),
        (FiberKind::IStar(2), 2, q(-1, 2)),
    ];
    for (k, d, want) in cases {
        assert_eq!(twisted_coefficient(k, d).unwrap(), want, "{k}");
    }
    let m = LocalModel::new(FiberKind::IStar(0), 4).with_mu(2);
    assert_eq!(twisted_coefficient_for(&m).unwrap(), q(3, 2));
}

fn random_surface(seed: u64) -> SurfaceData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = |m: u64| rng.gen_range(0..m);
    let kinds = [
        (FiberKind::IIStar, 2),
        (FiberKind::IVStar, 1),
        (FiberKind::IIIStar, 1),
        (FiberKind::IStar(0), 1),
        (FiberKind::I(3), 3),
        (FiberKind::IStar(2), 2),
        (FiberKind::IV, 2),
    ];
    let mut s = SurfaceData::new(1 + next(4) as u32, 1 + next(4) as i64, 1 + next(30) as u32);
    for _ in 0..next(4) {
        let (k, d) = kinds[next(kinds.len() as u64) as usize];
        s = s.with_fiber(k, d);
    }
    if next(2) == 0 {
        s = s.with_section(SectionData {
            name: "P".into(),
            dot_zero: next(3) as i64,
            dot_sections: Default::default(),
            in_mw0: true,
        });
    }
    s
}

#[test]
fn series_identity_holds_exactly() {
    for seed in 0..20u64 {
        let surf = random_surface(seed);
        let eps = q(1 + (seed as i64 * 7) % 11, 1 + (seed as i64 * 3) % 5);
        let id = series_identity(&surf, &eps).unwrap();
        assert!(id.holds, "seed {seed}: {} vs {}", id.lhs, id.rhs);
    }
}
