use num_integer::Integer;

use crate::{CatalogError, FiberKind, Sl2z};

/// Representative monodromy matrix of each kind.
pub fn monodromy_representative(kind: FiberKind) -> Sl2z {
    match kind {
        FiberKind::Regular => Sl2z::IDENTITY,
        FiberKind::I(b) => Sl2z::raw(1, b as i64, 0, 1),
        FiberKind::IStar(b) => Sl2z::raw(-1, -(b as i64), 0, -1),
        FiberKind::II => Sl2z::raw(1, 1, -1, 0),
        FiberKind::IIStar => Sl2z::raw(0, -1, 1, 1),
        FiberKind::IVStar => Sl2z::raw(-1, -1, 1, 0),
        FiberKind::IV => Sl2z::raw(0, 1, -1, -1),
        FiberKind::III => Sl2z::raw(0, 1, -1, 0),
        FiberKind::IIIStar => Sl2z::raw(0, -1, 1, 0),
    }
}

/// Kodaira type of a monodromy matrix, up to conjugacy in SL2(Z).
///
/// Parabolic elements: `b` is the content (gcd of entries) of `A - I`,
/// resp. `A + I`, which is its nonzero Smith invariant.
///
/// Elliptic elements: with `τ0` the fixed point in the upper half plane,
/// `λ = c τ0 + d` is the eigenvalue on `(τ0, 1)`. `Im λ < 0` gives the
/// unstarred kind. Solving the fixed-point quadratic shows `Im λ` has the
/// sign of `c`, so the test is exact.
pub fn classify_monodromy(m: &Sl2z) -> Result<FiberKind, CatalogError> {
    if m.det() != 1 {
        return Err(CatalogError::NotSL2Z(m.det()));
    }
    if *m == Sl2z::IDENTITY {
        return Ok(FiberKind::Regular);
    }
    if *m == Sl2z::IDENTITY.neg() {
        return Ok(FiberKind::IStar(0));
    }
    let content = |s: i64| {
        let e = [m.a - s, m.b, m.c, m.d - s];
        e.iter().fold(0i64, |g, &x| g.gcd(&x)) as u32
    };
    let unstarred = m.c < 0;
    match m.trace() {
        2 => Ok(FiberKind::I(content(1))),
        -2 => Ok(FiberKind::IStar(content(-1))),
        1 => Ok(if unstarred { FiberKind::II } else { FiberKind::IIStar }),
        -1 => Ok(if unstarred { FiberKind::IV } else { FiberKind::IVStar }),
        0 => Ok(if unstarred { FiberKind::III } else { FiberKind::IIIStar }),
        t => Err(CatalogError::NotKodaira(t)),
    }
}
