use fiber_catalog::Sl2z;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::{KahlerForm, MetricError, SiegelPoint};

/// `g(A, n)` acting by `(ζ, z) ↦ ((aζ+b)/(cζ+d), (z + n₁ζ + n₂)/(cζ+d))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    pub a: Sl2z,
    pub n: (i64, i64),
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { a: Sl2z::IDENTITY, n: (0, 0) };

    pub fn new(a: Sl2z, n: (i64, i64)) -> GroupElement {
        GroupElement { a, n }
    }

    pub fn modular(a: Sl2z) -> GroupElement {
        GroupElement { a, n: (0, 0) }
    }

    pub fn translation(n1: i64, n2: i64) -> GroupElement {
        GroupElement { a: Sl2z::IDENTITY, n: (n1, n2) }
    }

    /// `g(T,0), g(S,0), g(I,(1,0)), g(I,(0,1))`.
    pub fn generators() -> [GroupElement; 4] {
        [
            GroupElement::modular(Sl2z::T),
            GroupElement::modular(Sl2z::S),
            GroupElement::translation(1, 0),
            GroupElement::translation(0, 1),
        ]
    }

    fn row_times(n: (i64, i64), m: &Sl2z) -> (i64, i64) {
        (n.0 * m.a + n.1 * m.c, n.0 * m.b + n.1 * m.d)
    }

    /// `g(A,n)·g(B,m) = g(AB, nB + m)`; acting first by `o`, then by `self`.
    pub fn compose(&self, o: &GroupElement) -> GroupElement {
        let nb = Self::row_times(self.n, &o.a);
        GroupElement { a: self.a.mul(&o.a), n: (nb.0 + o.n.0, nb.1 + o.n.1) }
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self.a.inverse();
        let m = Self::row_times(self.n, &inv);
        GroupElement { a: inv, n: (-m.0, -m.1) }
    }

    pub fn act(&self, pt: &SiegelPoint) -> SiegelPoint {
        let j = self.a.automorphy(pt.zeta);
        let shifted = pt.z + pt.zeta * self.n.0 as f64 + self.n.1 as f64;
        SiegelPoint { zeta: self.a.mobius(pt.zeta), z: shifted / j }
    }

    /// Holomorphic Jacobian `∂(ζ', z')/∂(ζ, z)`.
    pub fn jacobian(&self, pt: &SiegelPoint) -> [[Complex64; 2]; 2] {
        let j = self.a.automorphy(pt.zeta);
        let shifted = pt.z + pt.zeta * self.n.0 as f64 + self.n.1 as f64;
        let zero = Complex64::new(0.0, 0.0);
        [
            [1.0 / (j * j), zero],
            [self.n.0 as f64 / j - shifted * self.a.c as f64 / (j * j), 1.0 / j],
        ]
    }
}

pub fn group_action(g: &GroupElement, pt: &SiegelPoint) -> SiegelPoint {
    g.act(pt)
}

/// `‖Jᵗ (M∘g) J̄ − M‖` in the Frobenius norm.
pub fn pullback_residual<K: KahlerForm + ?Sized>(g: &GroupElement, k: &K, pt: &SiegelPoint) -> f64 {
    let m1 = k.components(&g.act(pt)).matrix();
    let m0 = k.components(pt).matrix();
    let j = g.jacobian(pt);
    let mut sq = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            let mut s = Complex64::new(0.0, 0.0);
            for a in 0..2 {
                for b in 0..2 {
                    s += j[a][r] * m1[a][b] * j[b][c].conj();
                }
            }
            sq += (s - m0[r][c]).norm_sqr();
        }
    }
    sq.sqrt()
}

/// Largest pullback residual over the samples.
pub fn invariance_residual_of<K: KahlerForm + ?Sized>(g: &GroupElement, k: &K, samples: &[SiegelPoint])
    -> Result<f64, MetricError> {
    if samples.is_empty() {
        return Err(MetricError::EmptySamples);
    }
    Ok(samples.par_iter().map(|p| pullback_residual(g, k, p)).reduce(|| 0.0, f64::max))
}

pub fn invariance_residual<K: KahlerForm + ?Sized>(g: &GroupElement, k: &K, samples: &[SiegelPoint])
    -> Result<f64, MetricError> {
    invariance_residual_of(g, k, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MetricParams;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn action_examples() {
        let p = SiegelPoint::new(c(0.0, 1.0), c(1.0, 0.0)).unwrap();
        let q = GroupElement::modular(Sl2z::S).act(&p);
        assert!((q.zeta - c(0.0, 1.0)).norm() < 1e-15 && (q.z - c(0.0, 1.0)).norm() < 1e-15);
        let p = SiegelPoint::new(c(0.3, 0.8), c(-0.2, 0.5)).unwrap();
        let q = GroupElement::modular(Sl2z::T).act(&p);
        assert_eq!((q.zeta, q.z), (p.zeta + 1.0, p.z));
        let q = GroupElement::translation(1, 0).act(&p);
        assert_eq!((q.zeta, q.z), (p.zeta, p.z + p.zeta));
    }

    #[test]
    fn compose_is_action_of_product() {
        let p = SiegelPoint::new(c(0.3, 0.8), c(-0.2, 0.5)).unwrap();
        let g = GroupElement::new(Sl2z::S, (2, -1));
        let h = GroupElement::new(Sl2z::T, (1, 3));
        let a = g.compose(&h).act(&p);
        let b = g.act(&h.act(&p));
        assert!((a.zeta - b.zeta).norm() < 1e-14 && (a.z - b.z).norm() < 1e-14);
        let e = g.compose(&g.inverse());
        assert_eq!(e, GroupElement::IDENTITY);
    }

    #[test]
    fn base_metric_is_invariant() {
        let p = SiegelPoint::new(c(0.3, 0.8), c(-0.2, 0.5)).unwrap();
        for g in GroupElement::generators() {
            assert!(pullback_residual(&g, &MetricParams::BASE, &p) < 1e-12);
        }
        assert!(invariance_residual(&GroupElement::IDENTITY, &MetricParams::BASE, &[]).is_err());
    }
}
