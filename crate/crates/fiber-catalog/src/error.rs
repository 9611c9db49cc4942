use thiserror::Error;

use crate::FiberKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("matrix has determinant {0}, not 1")]
    NotSL2Z(i64),
    #[error("hyperbolic monodromy (trace {0}) is not a Kodaira type")]
    NotKodaira(i64),
    #[error("point outside the model domain: {0}")]
    OutOfDomain(String),
    #[error("no C^alpha exponent data for {0}")]
    NoExponentData(FiberKind),
    #[error("unknown fiber kind {0:?}")]
    UnknownKind(String),
}
