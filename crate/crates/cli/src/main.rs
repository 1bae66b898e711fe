//! `cobound`: cover invariants, cobordism bounds and staircase diagrams.
//!
//! Exit codes: 0 on success, 2 for bad input, 3 when an internal
//! cross-check fails.

mod args;
mod commands;
mod metacyclic;

use std::fs;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl From<cobound::Error> for CliError {
    fn from(e: cobound::Error) -> Self {
        match e {
            cobound::Error::InvariantViolation(_) => Self::Internal(e.to_string()),
            _ => Self::User(e.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            Self::User(_) => 2,
            Self::Internal(_) => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn run(cli: &Cli) -> CliResult<String> {
    let f = cli.format;
    match &cli.command {
        Command::Cover(a) => commands::cover(a, f),
        Command::Eigen(a) => commands::eigen(a, f),
        Command::Alexander(a) => commands::alexander(a, f),
        Command::Bound(a) => commands::bound(a, f),
        Command::Staircase(a) => commands::staircase(a, f),
        Command::Metacyclic { command } => metacyclic::run(command, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|mut out| {
        if !out.ends_with('\n') {
            out.push('\n');
        }
        match &cli.out {
            Some(path) => fs::write(path, out)
                .map_err(|e| CliError::User(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{out}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
