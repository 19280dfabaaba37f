//! Command-line front-end for `pmcut-core`: argument parsing, report
//! assembly and output formatting. The binary in `main.rs` is a thin wrapper
//! around [`run`].

pub mod args;
pub mod commands;
pub mod report;

use pmcut_core::Error;

pub use args::Cli;
pub use commands::run;

/// Failure of a CLI command, mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for malformed input, 3 when the graph exceeds the size cap, 1
    /// otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Parse { .. }) => 2,
            CliError::Core(Error::CapExceeded { .. }) => 3,
            _ => 1,
        }
    }
}
