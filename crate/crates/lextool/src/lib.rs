//! Command-line front end over `lexsegment-core`: argument grammar, JSON
//! encodings, reports with an optional oracle cross-check, and resumable
//! sweeps.

pub mod cli;
mod commands;
pub mod encode;
pub mod report;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use cli::Cli;
pub use report::{CrossCheck, Report};

pub const EXIT_OK: i32 = 0;
/// Parse, parameter and domain errors.
pub const EXIT_ERROR: i32 = 1;
/// The formula and the oracle disagree.
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lexsegment_core::Error),
    #[error("{}", caret(.label, .text, *.pos, .msg))]
    Input { label: String, text: String, pos: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

fn caret(label: &str, text: &str, pos: usize, msg: &str) -> String {
    format!("{label}, byte {pos}: {msg}\n  {text}\n  {}^", " ".repeat(pos))
}

/// Runs the parsed command and builds its report.
pub fn execute(cli: &Cli, argv: &[String]) -> Result<Report, CliError> {
    commands::dispatch(cli, argv.to_vec())
}

/// Parses `args` (program name first), runs, and writes the report to
/// `out` and diagnostics to `err`.  Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if informational {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_ERROR;
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, &argv) {
        Ok(report) => {
            let body = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let _ = out.write_all(body.as_bytes());
            if report.mismatch() {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
