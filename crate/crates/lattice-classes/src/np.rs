use exact_core::{solve_symmetric, Rat};
use fiber_catalog::{eta_intersection_vector, intersection_matrix, FiberKind};

use crate::LatticeError;

/// Correction `N_p = Σ c_i Θ_i` making the class orthogonal to the
/// non-identity components: the exact solution of `R_p c = v_p`.
pub fn compute_np(kind: FiberKind) -> Result<Vec<Rat>, LatticeError> {
    let r = intersection_matrix(kind);
    let v = eta_intersection_vector(kind);
    Ok(solve_symmetric(&r, &v)?)
}

/// `R_p c − v_p`, zero exactly when `c` is the correction for `kind`.
pub fn np_residual(kind: FiberKind, c: &[Rat]) -> Result<Vec<Rat>, LatticeError> {
    let r = intersection_matrix(kind);
    let v = eta_intersection_vector(kind);
    let rc = r.mul_vec(c)?;
    Ok(rc.iter().zip(&v).map(|(a, b)| a - b).collect())
}

/// The closed form `−i(b+1−i)/(2b)` on Θ_i sometimes quoted for I_b. It does
/// not solve `R_p c = v_p` for any `b ≥ 2`; kept so reports can flag it.
pub fn alternate_ib_closed_form(b: u32) -> Vec<Rat> {
    let b = b as i64;
    (1..b)
        .map(|i| Rat::new(-i * (b + 1 - i), 2 * b).expect("b >= 1"))
        .collect()
}
