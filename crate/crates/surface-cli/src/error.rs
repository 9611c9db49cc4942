use thiserror::Error;

/// Problems with a surface description itself.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid surface:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("usage: {0}")]
    Usage(String),
    #[error("fiber-catalog: {0}")]
    Catalog(#[from] fiber_catalog::CatalogError),
    #[error("lattice-classes: {0}")]
    Lattice(#[from] lattice_classes::LatticeError),
    #[error("flow-calculator: {0}")]
    Flow(#[from] flow_calculator::FlowError),
    #[error("metric-lab: {0}")]
    Metric(#[from] metric_lab::MetricError),
    #[error("weierstrass: {0}")]
    Series(#[from] weierstrass::SeriesError),
    #[error("exact-core: {0}")]
    Exact(#[from] exact_core::ExactError),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for anything traceable to the input, 2 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Json(_) => 2,
            _ => 1,
        }
    }
}
