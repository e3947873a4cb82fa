//! Command-line front end: knot table, run reports and the subcommands.

pub mod commands;
pub mod report;
pub mod table;

pub use commands::{Cli, Command};
pub use report::RunReport;
pub use table::{KnotTable, TableError};

use std::fmt;

/// A failed command, carrying its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<knotforge::Error> for CliError {
    fn from(e: knotforge::Error) -> Self {
        match e {
            knotforge::Error::Budget(_) => CliError::Budget(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        CliError::Domain(e.to_string())
    }
}
