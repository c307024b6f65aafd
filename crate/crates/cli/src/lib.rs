//! Command-line front end: parameter generation, dealing, verification,
//! reconstruction, cheater detection, rate tables and attack demos.
//!
//! Every command returns an [`Outcome`] holding its stdout text and exit
//! code, so the binary is a thin wrapper and tests can drive commands
//! in-process.

pub mod commands;
pub mod doc;

use std::ffi::OsString;
use std::fmt;

use clap::Parser;

pub use commands::Cli;

pub const EXIT_OK: i32 = 0;
/// REJECT from `verify`, or cheating found by `detect` / `identify`.
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_COLLISION: i32 = 4;
pub const EXIT_NO_MAJORITY: i32 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(EXIT_INVALID, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<polyvss::Error> for CliError {
    fn from(e: polyvss::Error) -> Self {
        use polyvss::Error as E;
        let code = match e {
            E::SearchBudgetExhausted(_) => EXIT_BUDGET,
            E::MidHalfCollision(_) => EXIT_COLLISION,
            E::NoMajority => EXIT_NO_MAJORITY,
            _ => EXIT_INVALID,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_INVALID, e.to_string())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn with_code(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => commands::run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
