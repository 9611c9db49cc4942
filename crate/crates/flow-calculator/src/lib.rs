//! Closed-form parameter formulas: the admissible interval, the curvature of
//! the series members, t₀, the Kähler–Ricci flow parameters and the
//! coefficients of its twisted form.

mod error;
mod flow;
mod scalars;
mod series;

pub use error::FlowError;
pub use flow::{
    class_parameter, krf_a, krf_a_limit, krf_step, limit_metrics, twisted_coefficient, twisted_coefficient_for,
    FlowState, LimitMetrics,
};
pub use scalars::{
    curvature_values,
    epsilon_of_t, scalar_curvature_eta_t, t_interval, t_of_epsilon, t_zero, t_zero_position, CurvatureReport,
    SurfaceScalars,
};
pub use series::{series_identity, SeriesIdentity};
