//! Exact scalars and small exact linear algebra.
//!
//! Everything that ends up as a divisor-class coefficient lives in
//! [`Rat`] or [`PiLinear`]. Ratios whose numerator or denominator involve
//! powers of π are carried as [`PiRatio`] and compared by clearing
//! denominators, never by division.

mod error;
mod matrix;
mod pi;
mod rat;

pub use error::ExactError;
pub use matrix::{mat_inverse, solve_symmetric, solve_symmetric_pi, IntSymMatrix, RatMatrix};
pub use pi::{pi_linear_eval, PiLinear, PiPoly, PiRatio};
pub use rat::Rat;

pub use num_bigint::BigInt;
