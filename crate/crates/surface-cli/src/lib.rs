//! Surface files, validation, reports and the `kodaira-lab` command line.

pub mod cli;
mod diagnostics;
mod error;
mod file;
pub mod report;
pub mod verify;

pub use diagnostics::{validate_surface, Diagnostic, Severity};
pub use error::{CliError, InputError};
pub use file::{parse_surface, read_surface, surface_to_json, FiberEntry, SectionEntry, SurfaceFile};
pub use report::{build_report, Report, ReportOptions, SCHEMA};
