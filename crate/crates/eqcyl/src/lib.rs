//! CLI companion to [`eqcyl_core`]: argument handling, settings
//! resolution, CSV ingestion and reports, and SVG rendering.

#![forbid(unsafe_code)]

pub mod cli;
pub mod commands;
pub mod config;
pub mod csv_io;
pub mod error;
pub mod svg;

pub use error::CliError;

/// Runs one parsed invocation end to end.
pub fn run(cli: cli::Cli) -> Result<(), CliError> {
    commands::run(cli)
}
