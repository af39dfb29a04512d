//! Command-line front end of `zetaforge`: runs corpus verifications,
//! evaluates individual functions and writes reports.

pub mod app;
pub mod functions;
pub mod report;

pub use app::{run, run_verify, RunConfig, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use report::{ReportDocument, ReportFormat, SCHEMA};
