use exact_core::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("section {0} is not in MW0; the pairing formula needs no local correction only there")]
    NotInMW0(String),
    #[error("intersection number {0}.{1} not supplied")]
    MissingIntersection(String, String),
    #[error("epsilon must be positive")]
    NonpositiveEpsilon,
}
