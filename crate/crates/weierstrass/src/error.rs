use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series outside its convergence guard: {0}")]
    ConvergenceGuard(String),
    #[error("pole of the series at n = {n}")]
    PoleHit { n: i64 },
    #[error("domain error: {0}")]
    Domain(String),
}
