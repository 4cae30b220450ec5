//! The `transform` subcommand: read serialized operands, apply one
//! operation, write the result as JSON.

use crate::{write_text, CliError, CliResult};
use clap::{Args, ValueEnum};
use freeconv::brownian::brownian_moments;
use freeconv::distributions::Distribution;
use freeconv::json::{
    distribution_from_json, distribution_to_json, parse_rational, series_from_json, series_to_json,
    DistributionJson, SeriesJson,
};
use freeconv::series::{Rational, Series, DEFAULT_DEGREE};
use freeconv::transforms::{reta, reta_inverse};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    /// Boolean-to-free semigroup at time --t >= 0.
    Bt,
    /// Two-state embedding; the degree rises by 2.
    Phi,
    /// Free-to-Boolean cumulant transform of a series.
    Reta,
    /// Inverse of reta.
    RetaInv,
    /// Free convolution power with exponent --t > 0.
    FreePower,
    /// Boolean convolution power with exponent --t > 0.
    BooleanPower,
    /// Free additive convolution of two distributions.
    FreeConv,
    /// Boolean additive convolution of two distributions.
    BooleanConv,
    /// Free multiplicative convolution of two distributions.
    MultConv,
    /// Dilation by the factor --t > 0.
    Dilate,
    /// Semicircular family of variance --t >= 0 (no input operand).
    Semicircular,
    /// Free convolution with the semicircular family of variance --t,
    /// computed by the direct pairing formula.
    Brownian,
}

#[derive(Args)]
pub(crate) struct TransformArgs {
    /// Operation to apply.
    #[arg(long, value_enum)]
    op: Op,
    /// Rational parameter as "p/q" or an integer: time, exponent,
    /// variance, or dilation factor, depending on --op.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Alphabet size (semicircular only).
    #[arg(long)]
    k: Option<usize>,
    /// Truncation degree (semicircular only).
    #[arg(long)]
    degree: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Input files, one per operand.
    inputs: Vec<PathBuf>,
}

fn required_t(args: &TransformArgs) -> CliResult<Rational> {
    let raw = args
        .t
        .as_deref()
        .ok_or_else(|| CliError::Malformed("this operation requires --t".to_string()))?;
    Ok(parse_rational(raw)?)
}

fn reject_t(args: &TransformArgs) -> CliResult<()> {
    if args.t.is_some() {
        return Err(CliError::Malformed(
            "this operation takes no --t".to_string(),
        ));
    }
    Ok(())
}

fn reject_shape_flags(args: &TransformArgs) -> CliResult<()> {
    if args.k.is_some() || args.degree.is_some() {
        return Err(CliError::Malformed(
            "--k and --degree apply only to --op semicircular; other operations \
             take their shape from the input"
                .to_string(),
        ));
    }
    Ok(())
}

fn operands<const N: usize>(args: &TransformArgs) -> CliResult<[&PathBuf; N]> {
    let got: Vec<&PathBuf> = args.inputs.iter().collect();
    got.try_into().map_err(|_| {
        CliError::Malformed(format!(
            "this operation takes exactly {N} input file(s), got {}",
            args.inputs.len()
        ))
    })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Malformed(format!("cannot parse {}: {e}", path.display())))
}

fn read_distribution(path: &PathBuf) -> CliResult<Distribution> {
    let json: DistributionJson = read_json(path)?;
    Ok(distribution_from_json(&json)?)
}

fn read_series(path: &PathBuf) -> CliResult<Series> {
    let json: SeriesJson = read_json(path)?;
    Ok(series_from_json(&json)?)
}

fn same_alphabet(a: &Distribution, b: &Distribution) -> CliResult<()> {
    if a.k() != b.k() {
        return Err(CliError::Domain(format!(
            "cannot convolve distributions over different alphabets ({} vs {})",
            a.k(),
            b.k()
        )));
    }
    Ok(())
}

fn emit_distribution(args: &TransformArgs, dist: &Distribution) -> CliResult<()> {
    let text = serde_json::to_string_pretty(&distribution_to_json(dist))
        .expect("report serialization cannot fail");
    write_text(&args.out, &format!("{text}\n"))
}

fn emit_series(args: &TransformArgs, series: &Series) -> CliResult<()> {
    let text = serde_json::to_string_pretty(&series_to_json(series))
        .expect("report serialization cannot fail");
    write_text(&args.out, &format!("{text}\n"))
}

pub(crate) fn run(args: &TransformArgs) -> CliResult<ExitCode> {
    match args.op {
        Op::Semicircular => {
            if !args.inputs.is_empty() {
                return Err(CliError::Malformed(
                    "semicircular takes no input files".to_string(),
                ));
            }
            let t = required_t(args)?;
            let k = args.k.unwrap_or(1);
            let degree = args.degree.unwrap_or(DEFAULT_DEGREE);
            if k == 0 {
                return Err(CliError::Malformed("--k must be at least 1".to_string()));
            }
            let dist = Distribution::semicircular(k, degree, &t)?;
            emit_distribution(args, &dist)?;
        }
        Op::Bt => {
            reject_shape_flags(args)?;
            let [input] = operands::<1>(args)?;
            let t = required_t(args)?;
            emit_distribution(args, &read_distribution(input)?.bbp(&t)?)?;
        }
        Op::Phi => {
            reject_shape_flags(args)?;
            reject_t(args)?;
            let [input] = operands::<1>(args)?;
            emit_distribution(args, &read_distribution(input)?.phi())?;
        }
        Op::FreePower => {
            reject_shape_flags(args)?;
            let [input] = operands::<1>(args)?;
            let t = required_t(args)?;
            emit_distribution(args, &read_distribution(input)?.free_power(&t)?)?;
        }
        Op::BooleanPower => {
            reject_shape_flags(args)?;
            let [input] = operands::<1>(args)?;
            let t = required_t(args)?;
            emit_distribution(args, &read_distribution(input)?.boolean_power(&t)?)?;
        }
        Op::Dilate => {
            reject_shape_flags(args)?;
            let [input] = operands::<1>(args)?;
            let t = required_t(args)?;
            emit_distribution(args, &read_distribution(input)?.dilate(&t)?)?;
        }
        Op::Brownian => {
            reject_shape_flags(args)?;
            let [input] = operands::<1>(args)?;
            let t = required_t(args)?;
            emit_distribution(args, &brownian_moments(&read_distribution(input)?, &t)?)?;
        }
        Op::FreeConv | Op::BooleanConv | Op::MultConv => {
            reject_shape_flags(args)?;
            reject_t(args)?;
            let [first, second] = operands::<2>(args)?;
            let a = read_distribution(first)?;
            let b = read_distribution(second)?;
            same_alphabet(&a, &b)?;
            let result = match args.op {
                Op::FreeConv => a.free_convolve(&b),
                Op::BooleanConv => a.boolean_convolve(&b),
                _ => a.mult_convolve(&b),
            };
            emit_distribution(args, &result)?;
        }
        Op::Reta | Op::RetaInv => {
            reject_shape_flags(args)?;
            reject_t(args)?;
            let [input] = operands::<1>(args)?;
            let series = read_series(input)?;
            let result = if args.op == Op::Reta {
                reta(&series)
            } else {
                reta_inverse(&series)
            };
            emit_series(args, &result)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
