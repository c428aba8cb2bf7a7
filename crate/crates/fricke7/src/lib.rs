//! Command-line driver for `fricke7-core`: prime sweeps, registry suites and
//! CM checks, with table, CSV and JSON output.
//!
//! Everything the binary does is reachable from here, so tests can run a
//! configuration in-process with [`run::execute`] and render it with
//! [`output::render`].

pub mod config;
pub mod output;
pub mod report;
pub mod run;

pub use config::{Command, Format, PrimeSpec, RunConfig};
pub use report::{Report, ReportRow, SuiteRow};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] fricke7_core::Error),
    #[error("cannot render report: {0}")]
    Render(String),
}

impl CliError {
    /// 2 for usage and configuration problems, 3 for internal failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(_) | CliError::Render(_) => 3,
        }
    }
}

/// Runs `cfg`, renders it and returns the payload with the process exit code.
pub fn run_to_string(cfg: &RunConfig) -> Result<(String, u8, Report), CliError> {
    let report = run::execute(cfg)?;
    let text = output::render(&report, cfg.command, cfg.format)?;
    Ok((text, run::exit_code(&report), report))
}
