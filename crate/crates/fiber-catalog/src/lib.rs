//! Kodaira singular fibers and their local data.
//!
//! Component indices follow the labelling Θ1, Θ2, ... of the non-identity
//! components used throughout; index `i` of every vector or matrix here
//! refers to Θ(i+1).

mod catalog;
mod error;
mod kind;
mod local;
mod monodromy;
mod sl2z;

pub use catalog::{
    component_labels, eta_intersection_vector, extension_exponents, fiber_constants,
    intersection_matrix, ComponentExponent, DpRule, FiberConstants, Order,
};
pub use error::CatalogError;
pub use kind::FiberKind;
pub use local::{
    equivariance_residual, lattice_residual, local_action, local_period, validate_order,
    LocalModel, OrderCheck,
};
pub use monodromy::{classify_monodromy, monodromy_representative};
pub use sl2z::Sl2z;
