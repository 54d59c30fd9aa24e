//! Command-line front end: ring validation and analysis, quantum-group
//! reports, central charge bounds and regeneration of the published tables.

pub mod cli;
pub mod commands;
pub mod golden;
pub mod report;
pub mod tables;

pub use cli::{Command, OutputFormat, RunConfig, Table};
pub use commands::run;
pub use report::{CliError, Outcome, Status};
