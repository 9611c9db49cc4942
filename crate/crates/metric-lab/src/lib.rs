//! Numerics for the semi-flat metric family on H⁺ × C.

mod density;
mod error;
mod fd;
mod group;
mod limits;
mod metric;
mod point;

pub use density::{hyperbolic_density, limit_balance_residual, pullback_density, ricci_density};
pub use error::MetricError;
pub use fd::FiniteDiff;
pub use group::{group_action, invariance_residual, invariance_residual_of, pullback_residual, GroupElement};
pub use limits::{
    fixed_point_value, local_potential_limit, orbit_averaged_limit, richardson_ratio10, LimitEstimate,
};
pub use metric::{
    fiber_volume, fiber_volume_of, metric_components, metric_components_fd, potential, scalar_curvature,
    scalar_curvature_of, AlphaBeta, KahlerForm,
};
pub use point::{MetricComponents, MetricParams, SiegelPoint};
