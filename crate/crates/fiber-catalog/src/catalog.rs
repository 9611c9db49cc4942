use std::fmt;

use exact_core::{IntSymMatrix, Rat};
use serde::{Serialize, Serializer};

use crate::{CatalogError, FiberKind};

/// Finite positive order or ∞.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(*n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => serializer.serialize_u32(*n),
            Order::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Admissible values of the local order `d_p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum DpRule {
    Congruent { modulus: u32, residue: u32 },
    /// `d_p ≡ 0 mod μ_p`, with μ_p set by the value of J at the point.
    MultipleOfMu,
    /// Pole order equal to the parameter `b`.
    EqualsB { b: u32 },
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FiberConstants {
    pub delta_p: Rat,
    pub mu_p: Order,
    pub h_p: Order,
    /// Topological Euler number; standard values, used only for the
    /// advisory `12χ` check.
    pub euler_e: u32,
    pub d_p_rule: DpRule,
    /// Multiplicities of Θ0, Θ1, ... in the fiber.
    pub component_multiplicities: Vec<u32>,
}

pub fn fiber_constants(kind: FiberKind) -> FiberConstants {
    use FiberKind::*;
    let q = |p: i64, d: i64| Rat::new(p, d).expect("nonzero denominator");
    let cong = |modulus, residue| DpRule::Congruent { modulus, residue };
    let (delta_p, mu_p, h_p, euler_e, d_p_rule, component_multiplicities) = match kind {
        Regular => (q(0, 1), Order::Finite(1), Order::Finite(1), 0, DpRule::MultipleOfMu, vec![1]),
        I(b) => (q(0, 1), Order::Infinite, Order::Infinite, b, DpRule::EqualsB { b }, vec![1; b as usize]),
        IStar(0) => (q(1, 2), Order::Finite(1), Order::Finite(2), 6, DpRule::MultipleOfMu, vec![1, 1, 1, 1, 2]),
        IStar(b) => {
            let mut m = vec![1, 1, 1, 1];
            m.extend(std::iter::repeat(2).take(b as usize + 1));
            (q(1, 2), Order::Infinite, Order::Infinite, b + 6, DpRule::EqualsB { b }, m)
        }
        II => (q(1, 6), Order::Finite(3), Order::Finite(6), 2, cong(3, 1), vec![1]),
        IIStar => (q(5, 6), Order::Finite(3), Order::Finite(6), 10, cong(3, 2), vec![1, 2, 3, 4, 5, 6, 4, 3, 2]),
        III => (q(1, 4), Order::Finite(2), Order::Finite(4), 3, cong(2, 1), vec![1, 1]),
        IIIStar => (q(3, 4), Order::Finite(2), Order::Finite(4), 9, cong(2, 1), vec![1, 2, 3, 4, 3, 2, 2, 1]),
        IV => (q(1, 3), Order::Finite(3), Order::Finite(3), 4, cong(3, 2), vec![1, 1, 1]),
        IVStar => (q(2, 3), Order::Finite(3), Order::Finite(3), 8, cong(3, 1), vec![1, 2, 3, 2, 2, 1, 1]),
    };
    FiberConstants { delta_p, mu_p, h_p, euler_e, d_p_rule, component_multiplicities }
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> IntSymMatrix {
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n {
        m.set_sym(i, i, -2);
    }
    for &(i, j) in edges {
        m.set_sym(i - 1, j - 1, 1);
    }
    m
}

/// Intersection matrix of the non-identity components Θ1, Θ2, ...
///
/// Irreducible fibers (regular, I1, II) give the empty matrix. For III the
/// single entry is the reduced self-intersection −2.
pub fn intersection_matrix(kind: FiberKind) -> IntSymMatrix {
    use FiberKind::*;
    match kind {
        Regular | II | I(1) => IntSymMatrix::zeros(0),
        I(b) => {
            let n = b as usize - 1;
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            from_edges(n, &edges)
        }
        IStar(b) => {
            let b = b as usize;
            let last = 4 + b;
            let mut edges = vec![(1, 4), (2, last), (3, last)];
            edges.extend((4..last).map(|i| (i, i + 1)));
            from_edges(b + 4, &edges)
        }
        III => from_edges(1, &[]),
        IV => from_edges(2, &[(1, 2)]),
        IVStar => from_edges(6, &[(1, 2), (2, 3), (2, 4), (3, 5), (4, 6)]),
        IIIStar => from_edges(7, &[(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (6, 7)]),
        IIStar => from_edges(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8)]),
    }
}

/// Intersection numbers of the semi-flat class with Θ1, Θ2, ...
pub fn eta_intersection_vector(kind: FiberKind) -> Vec<Rat> {
    use FiberKind::*;
    let q = |p: i64, d: i64| Rat::new(p, d).expect("nonzero denominator");
    let z = Rat::zero;
    match kind {
        Regular | II | I(1) => vec![],
        I(b) => vec![q(1, b as i64); b as usize - 1],
        IStar(0) => vec![z(), z(), z(), q(1, 2)],
        IStar(b) => {
            let b = b as i64;
            let mut v = vec![z(), z(), z(), q(1, 4 * b)];
            v.extend(std::iter::repeat(q(1, 2 * b)).take(b as usize - 1));
            v.push(q(1, 4 * b));
            v
        }
        III => vec![q(1, 2)],
        IV => vec![q(1, 3), q(1, 3)],
        IVStar => {
            let mut v = vec![z(); 6];
            v[1] = q(1, 3);
            v
        }
        IIIStar => {
            let mut v = vec![z(); 7];
            v[2] = q(1, 4);
            v
        }
        IIStar => {
            let mut v = vec![z(); 8];
            v[4] = q(1, 6);
            v
        }
    }
}

/// Labels `Theta_1`, `Theta_2`, ... of the non-identity components.
pub fn component_labels(kind: FiberKind) -> Vec<String> {
    (1..=intersection_matrix(kind).size()).map(|i| format!("Theta_{i}")).collect()
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ComponentExponent {
    pub component: String,
    pub alpha: Rat,
}

/// Hölder exponents of the vanishing extension along each component of a
/// fiber with finite monodromy. Labels are those of the orbifold resolution
/// of each type; they are not the Θi indices of [`intersection_matrix`].
pub fn extension_exponents(kind: FiberKind) -> Result<Vec<ComponentExponent>, CatalogError> {
    use FiberKind::*;
    let q = |p: i64, d: i64| Rat::new(p, d).expect("nonzero denominator");
    let table: Vec<(&str, Rat)> = match kind {
        IStar(0) => (1..=4).map(|i| (["Theta_1", "Theta_2", "Theta_3", "Theta_4"][i - 1], q(1, 2))).collect(),
        IVStar => ["Theta_01", "Theta_02", "Theta_11", "Theta_12", "Theta_21", "Theta_22"]
            .into_iter()
            .map(|l| (l, q(1, 3)))
            .collect(),
        IIIStar => vec![
            ("Theta_01", q(1, 4)),
            ("Theta_02", q(1, 2)),
            ("Theta_03", q(1, 2)),
            ("Theta_11", q(1, 4)),
            ("Theta_12", q(1, 2)),
            ("Theta_13", q(1, 2)),
            ("Theta_2", q(1, 2)),
        ],
        IIStar => vec![
            ("Theta_1", q(1, 6)),
            ("Theta_2", q(1, 3)),
            ("Theta_3", q(1, 2)),
            ("Theta_4", q(2, 3)),
            ("Theta_5", q(2, 3)),
            ("Theta_6", q(1, 3)),
            ("Theta_7", q(2, 3)),
            ("Theta_8", q(1, 2)),
        ],
        IV => vec![("Theta_1", q(1, 3)), ("Theta_2", q(1, 3)), ("Theta_3", q(1, 3))],
        III => vec![("Theta_0", q(1, 4)), ("Theta_1", q(1, 4)), ("Theta_2", q(1, 2))],
        II => vec![("Theta_1", q(1, 6)), ("Theta_2", q(1, 3)), ("Theta_3", q(1, 2))],
        Regular | I(_) | IStar(_) => return Err(CatalogError::NoExponentData(kind)),
    };
    Ok(table
        .into_iter()
        .map(|(l, a)| ComponentExponent { component: l.to_string(), alpha: a })
        .collect())
}
