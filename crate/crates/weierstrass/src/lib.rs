//! The modular function j and Kodaira's multiplicative model of an I₁
//! degeneration: x, y, g₂, g₃ series and the cubic relation between them.

mod doublelog;
mod error;
mod modular;
mod series;
mod sum;

pub use doublelog::{double_log_cross_term, double_log_potential};
pub use error::SeriesError;
pub use modular::j_normalized;
pub use series::{
    calibration_sweep, cubic_residual, eisenstein_g, kodaira_xy, nodal_fiber_check, weierstrass_residual,
    Calibration, CubicVariant, SeriesValue, VariantResidual, CALIBRATED,
};
