//! The `enumerate` subcommand: count a partition family on `{1..n}` and
//! optionally list its members in canonical text form.

use crate::{write_text, CliError, CliResult};
use clap::{Args, ValueEnum};
use freeconv::partitions::{enumerate_interval, enumerate_nc, enumerate_nc_le2, GroundSet};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    /// Non-crossing partitions (Catalan many).
    Nc,
    /// Non-crossing partial pairings: blocks of size <= 2 (Motzkin many).
    Nc2,
    /// Interval partitions (2^(n-1) many).
    Interval,
}

#[derive(Args)]
pub(crate) struct EnumerateArgs {
    /// Partition family.
    #[arg(value_enum)]
    kind: Family,
    /// Size of the ground set {1..n}.
    n: usize,
    /// Also print every partition, one per line.
    #[arg(long)]
    list: bool,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub(crate) fn run(args: &EnumerateArgs) -> CliResult<ExitCode> {
    let cap = match args.kind {
        Family::Nc => 12,
        Family::Nc2 => 14,
        Family::Interval => 16,
    };
    if args.n == 0 || args.n > cap {
        return Err(CliError::Malformed(format!(
            "n must be between 1 and {cap} for this family, got {}",
            args.n
        )));
    }
    let ground = GroundSet::first_n(args.n);
    let members: Vec<String> = match args.kind {
        Family::Nc => enumerate_nc(&ground)
            .iter()
            .map(|p| p.to_string())
            .collect(),
        Family::Nc2 => enumerate_nc_le2(&ground)
            .iter()
            .map(|p| p.to_string())
            .collect(),
        Family::Interval => enumerate_interval(&ground)
            .iter()
            .map(|p| p.to_string())
            .collect(),
    };
    let mut text = format!("{}\n", members.len());
    if args.list {
        for member in &members {
            writeln!(text, "{member}").expect("string writes cannot fail");
        }
    }
    write_text(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}
