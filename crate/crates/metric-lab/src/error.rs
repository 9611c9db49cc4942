use fiber_catalog::{CatalogError, FiberKind};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no limit constant for {kind} at index {index}")]
    BadIndex { kind: FiberKind, index: usize },
    #[error("empty sample list")]
    EmptySamples,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
