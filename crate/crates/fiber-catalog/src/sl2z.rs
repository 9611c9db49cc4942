use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::CatalogError;

/// Integer 2x2 matrix of determinant one, `[[a, b], [c, d]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2z {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Sl2z {
    pub const IDENTITY: Sl2z = Sl2z { a: 1, b: 0, c: 0, d: 1 };
    pub const T: Sl2z = Sl2z { a: 1, b: 1, c: 0, d: 1 };
    pub const S: Sl2z = Sl2z { a: 0, b: 1, c: -1, d: 0 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Sl2z, CatalogError> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(CatalogError::NotSL2Z(det));
        }
        Ok(Sl2z { a, b, c, d })
    }

    /// Entries without the determinant check, for classification input.
    pub const fn raw(a: i64, b: i64, c: i64, d: i64) -> Sl2z {
        Sl2z { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn mul(&self, o: &Sl2z) -> Sl2z {
        Sl2z {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Sl2z {
        Sl2z { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn neg(&self) -> Sl2z {
        Sl2z { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn pow(&self, k: u32) -> Sl2z {
        (0..k).fold(Sl2z::IDENTITY, |acc, _| acc.mul(self))
    }

    /// `c z + d`.
    pub fn automorphy(&self, z: Complex64) -> Complex64 {
        z * self.c as f64 + self.d as f64
    }

    /// Möbius action `(a z + b) / (c z + d)`.
    pub fn mobius(&self, z: Complex64) -> Complex64 {
        (z * self.a as f64 + self.b as f64) / self.automorphy(z)
    }
}

impl fmt::Debug for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
