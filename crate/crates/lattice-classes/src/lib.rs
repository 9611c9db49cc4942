//! Divisor classes on a minimal elliptic surface with section.
//!
//! Classes are written in the basis `[s], [F], Θ_{p,i}` plus a symbolic
//! essential part spanned by Shioda images ψ(s_i) of Mordell–Weil
//! generators. Coefficients live in Q + Qπ.

mod classes;
mod divisor;
mod error;
mod np;
mod surface;

pub use classes::{
    assemble_eta_class, canonical_class, class_d_x, eta_epsilon_class, essential_symbol,
    shioda_image, shioda_pairing, trivial_class_t,
};
pub use divisor::{ComponentKey, DivisorClass, LinearForm};
pub use error::LatticeError;
pub use np::{alternate_ib_closed_form, compute_np, np_residual};
pub use surface::{SectionData, SingularFiber, SurfaceData};
