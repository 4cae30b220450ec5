//! Command-line front end: apply transforms to serialized distributions,
//! run named verification suites, and enumerate partition families.
//!
//! Exit codes: 0 success, 1 a verification suite found a failing check,
//! 2 usage errors or malformed input, 3 structurally valid input outside
//! an operation's domain (a negative time, a non-Hermitian matrix, ...).

mod enumerate;
mod transform;
mod verify;

use clap::{Parser, Subcommand};
use freeconv::distributions::DistributionError;
use freeconv::json::JsonError;
use freeconv::partitions::PartitionError;
use freeconv::transforms::TransformError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub(crate) enum CliError {
    /// Unreadable, unparseable, or internally inconsistent input: exit 2.
    Malformed(String),
    /// Well-formed input that an operation's domain excludes: exit 3.
    Domain(String),
}

pub(crate) type CliResult<T> = Result<T, CliError>;

impl From<DistributionError> for CliError {
    fn from(e: DistributionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        match e {
            // a matrix that fails the Hermitian or unit-state test is a
            // domain violation, not a syntax problem
            JsonError::Model(model) => CliError::Domain(model.to_string()),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

/// Writes `text` to `--out` when given, else to stdout.
pub(crate) fn write_text(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Malformed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Parser)]
#[command(
    name = "freeconv",
    version,
    about = "Exact transforms and verification for free and Boolean convolutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a transform to serialized series or distributions.
    Transform(transform::TransformArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(verify::VerifyArgs),
    /// Count or list a partition family.
    Enumerate(enumerate::EnumerateArgs),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Transform(args) => transform::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Enumerate(args) => enumerate::run(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
