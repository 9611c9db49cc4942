use exact_core::ExactError;
use lattice_classes::LatticeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FlowError {
    #[error("chi must be positive, got {0}")]
    NonpositiveChi(i64),
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("jacobian degree must be at least 1")]
    ZeroDegree,
    #[error("t = {t} outside (0, {upper})")]
    OutOfInterval { t: String, upper: String },
    #[error("degenerate denominator in a(t)")]
    DegenerateDenominator,
    #[error("{0}")]
    BadOrder(String),
    #[error("invalid flow input: {0}")]
    Domain(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
