//! The `verify` subcommand: named suites, one per proved identity, each
//! emitting a JSON report with per-check detail and exiting 1 on any
//! failure.
//!
//! Suites draw their instances from the seeded samplers, so a report is
//! reproducible from its `seed` and parameters alone.

use crate::{write_text, CliError, CliResult};
use clap::{Args, ValueEnum};
use freeconv::brownian::brownian_check;
use freeconv::distributions::{
    boxtimes_bbp_check, exponent_commutation_check, phi_brownian_check, power_dilation_checks,
    semigroup_check, Distribution,
};
use freeconv::json::{model_input_from_json, parse_rational, ModelInputJson};
use freeconv::operator_model::{
    phi_model_check_with_tol, sandwich_check, vanishing_check, ModelReport, OperatorModel,
    MODEL_MOMENT_TOL,
};
use freeconv::partitions::{
    count_strongly_coarser, enclose_pairing, endpoint_pairing, enumerate_nc, enumerate_nc_le2,
    GroundSet, SetPartition,
};
use freeconv::report::{compare_series, IdentityReport};
use freeconv::sampling::{
    random_distribution, random_hermitian_input, random_series, rng_from_seed,
};
use freeconv::series::{rat, Rational, Word};
use freeconv::transforms::{
    reta, reta_inverse, reta_inverse_alternating, reta_negation_identity, reta_scaling_identity,
};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Composing the Boolean-to-free semigroup adds the times.
    Semigroup,
    /// Free and Boolean convolution powers commute after adjusting
    /// exponents.
    Commutation,
    /// Rescaling laws for iterated reta, its negated iteration, the
    /// alternating inverse route, and inverse round trips.
    RetaIteration,
    /// Counting strongly coarser non-crossing partitions equals a
    /// binomial coefficient, exhaustively.
    Lemma35,
    /// The semigroup is a homomorphism for multiplicative convolution.
    BoxtimesHomo,
    /// Convolution powers slide through multiplicative convolution at the
    /// cost of a dilation.
    PowerDilation,
    /// The pairing-sum formula for semicircular convolution matches the
    /// cumulant route.
    Brownian,
    /// The two-state embedding intertwines semicircular convolution with
    /// the semigroup.
    PhiBrownian,
    /// The finite-dimensional operator model realizes the embedding.
    OperatorModel,
    /// The pairing/partition bijection between pairings of {1..n} and
    /// singleton-free non-crossing partitions of {0..n+1} tying 0 to n+1.
    AlphaBeta,
}

#[derive(Args)]
pub(crate) struct VerifyArgs {
    /// Suite to run.
    #[arg(value_enum)]
    suite: Suite,
    /// Alphabet size for sampled distributions.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Truncation degree; each suite has its own default.
    #[arg(long)]
    degree: Option<usize>,
    /// Seed for the sampled instances.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of sampled instances.
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Exhaustive size for lemma35 and alpha-beta.
    #[arg(long)]
    n: Option<usize>,
    /// Replace a suite's time/exponent grid with a single value.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Second parameter where a suite uses a pair (with --t for
    /// semigroup; alone for reta-iteration).
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Exponent pair for commutation (both required together).
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Tolerance base for operator-model moment comparisons.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CheckReport {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: String,
    seed: u64,
    params: BTreeMap<String, String>,
    passed: bool,
    checks: Vec<CheckReport>,
}

fn identity_check(name: String, report: &IdentityReport) -> CheckReport {
    let detail = if report.passed() {
        format!("{} coefficients compared", report.words_checked)
    } else {
        let shown: Vec<String> = report
            .mismatches
            .iter()
            .take(3)
            .map(|m| format!("({}) lhs = {}, rhs = {}", m.word, m.lhs, m.rhs))
            .collect();
        let mut text = format!(
            "{} of {} coefficients disagree: {}",
            report.mismatches.len(),
            report.words_checked,
            shown.join("; ")
        );
        if report.mismatches.len() > 3 {
            text.push_str(&format!("; and {} more", report.mismatches.len() - 3));
        }
        text
    };
    CheckReport {
        name,
        passed: report.passed(),
        detail,
    }
}

fn model_check(name: String, report: &ModelReport) -> CheckReport {
    let detail = if report.passed() {
        format!(
            "{} comparisons, worst defect {:.3e}",
            report.checks, report.worst_defect
        )
    } else {
        let shown: Vec<String> = report
            .failures
            .iter()
            .take(3)
            .map(|f| {
                format!(
                    "{}: got {}, expected {} (defect {:.3e})",
                    f.label, f.got, f.expected, f.defect
                )
            })
            .collect();
        let mut text = format!(
            "{} of {} comparisons failed: {}",
            report.failures.len(),
            report.checks,
            shown.join("; ")
        );
        if report.failures.len() > 3 {
            text.push_str(&format!("; and {} more", report.failures.len() - 3));
        }
        text
    };
    CheckReport {
        name,
        passed: report.passed(),
        detail,
    }
}

fn plain_check(name: String, passed: bool, detail: String) -> CheckReport {
    CheckReport {
        name,
        passed,
        detail,
    }
}

fn parse_flag(raw: &Option<String>, flag: &str) -> CliResult<Option<Rational>> {
    match raw {
        None => Ok(None),
        Some(text) => parse_rational(text)
            .map(Some)
            .map_err(|e| CliError::Malformed(format!("{flag}: {e}"))),
    }
}

/// The time grid for a suite: the override when `--t` was given, the
/// suite's default grid otherwise.
fn time_grid(args: &VerifyArgs, default: &[(i64, i64)]) -> CliResult<Vec<Rational>> {
    Ok(match parse_flag(&args.t, "--t")? {
        Some(t) => vec![t],
        None => default.iter().map(|&(n, d)| rat(n, d)).collect(),
    })
}

fn grid_label(grid: &[Rational]) -> String {
    grid.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn run(args: &VerifyArgs) -> CliResult<ExitCode> {
    let mut checks = Vec::new();
    let mut params = BTreeMap::new();
    let suite = match args.suite {
        Suite::Semigroup => "semigroup",
        Suite::Commutation => "commutation",
        Suite::RetaIteration => "reta-iteration",
        Suite::Lemma35 => "lemma35",
        Suite::BoxtimesHomo => "boxtimes-homo",
        Suite::PowerDilation => "power-dilation",
        Suite::Brownian => "brownian",
        Suite::PhiBrownian => "phi-brownian",
        Suite::OperatorModel => "operator-model",
        Suite::AlphaBeta => "alpha-beta",
    };
    match args.suite {
        Suite::Semigroup => semigroup(args, &mut params, &mut checks)?,
        Suite::Commutation => commutation(args, &mut params, &mut checks)?,
        Suite::RetaIteration => reta_iteration(args, &mut params, &mut checks)?,
        Suite::Lemma35 => lemma35(args, &mut params, &mut checks)?,
        Suite::BoxtimesHomo => boxtimes_homo(args, &mut params, &mut checks)?,
        Suite::PowerDilation => power_dilation(args, &mut params, &mut checks)?,
        Suite::Brownian => brownian(args, &mut params, &mut checks)?,
        Suite::PhiBrownian => phi_brownian(args, &mut params, &mut checks)?,
        Suite::OperatorModel => operator_model(args, &mut params, &mut checks)?,
        Suite::AlphaBeta => alpha_beta(args, &mut params, &mut checks)?,
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = SuiteReport {
        suite: suite.to_string(),
        seed: args.seed,
        params,
        passed,
        checks,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serialization cannot fail");
    write_text(&args.out, &format!("{text}\n"))?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn shape_params(params: &mut BTreeMap<String, String>, k: usize, degree: usize, trials: usize) {
    params.insert("k".to_string(), k.to_string());
    params.insert("degree".to_string(), degree.to_string());
    params.insert("trials".to_string(), trials.to_string());
}

fn semigroup(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(6);
    let pairs: Vec<(Rational, Rational)> =
        match (parse_flag(&args.s, "--s")?, parse_flag(&args.t, "--t")?) {
            (Some(s), Some(t)) => vec![(s, t)],
            (None, None) => vec![
                (rat(1, 1), rat(1, 1)),
                (rat(1, 2), rat(3, 2)),
                (rat(2, 1), rat(3, 1)),
                (rat(0, 1), rat(2, 1)),
            ],
            _ => {
                return Err(CliError::Malformed(
                    "--s and --t must be given together for the semigroup suite".to_string(),
                ))
            }
        };
    shape_params(params, args.k, degree, args.trials);
    params.insert(
        "pairs".to_string(),
        pairs
            .iter()
            .map(|(s, t)| format!("({s}, {t})"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let mu = random_distribution(&mut rng, args.k, degree);
        for (s, t) in &pairs {
            let report = semigroup_check(&mu, s, t)?;
            checks.push(identity_check(
                format!("trial {trial}: semigroup s = {s}, t = {t}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn commutation(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(6);
    let pairs: Vec<(Rational, Rational)> =
        match (parse_flag(&args.p, "--p")?, parse_flag(&args.q, "--q")?) {
            (Some(p), Some(q)) => vec![(p, q)],
            (None, None) => vec![
                (rat(2, 1), rat(3, 4)),
                (rat(3, 1), rat(7, 8)),
                (rat(3, 2), rat(1, 2)),
            ],
            _ => {
                return Err(CliError::Malformed(
                    "--p and --q must be given together for the commutation suite".to_string(),
                ))
            }
        };
    shape_params(params, args.k, degree, args.trials);
    params.insert(
        "exponents".to_string(),
        pairs
            .iter()
            .map(|(p, q)| format!("({p}, {q})"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let mu = random_distribution(&mut rng, args.k, degree);
        for (p, q) in &pairs {
            let report = exponent_commutation_check(&mu, p, q)?;
            checks.push(identity_check(
                format!("trial {trial}: commutation p = {p}, q = {q}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn reta_iteration(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(6);
    let scales: Vec<Rational> = match parse_flag(&args.s, "--s")? {
        Some(s) => vec![s],
        None => vec![rat(1, 1), rat(2, 1), rat(-1, 2), rat(3, 4)],
    };
    shape_params(params, args.k, degree, args.trials);
    params.insert("scales".to_string(), grid_label(&scales));
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let f = random_series(&mut rng, args.k, degree);
        for s in &scales {
            let report = reta_scaling_identity(&f, s)?;
            checks.push(identity_check(
                format!("trial {trial}: rescaled iteration s = {s}"),
                &report,
            ));
        }
        checks.push(identity_check(
            format!("trial {trial}: negated iteration"),
            &reta_negation_identity(&f),
        ));
        let g = reta(&f);
        checks.push(identity_check(
            format!("trial {trial}: inverse round trip"),
            &IdentityReport::combine([
                compare_series(&reta_inverse(&g), &f),
                compare_series(&reta(&reta_inverse(&f)), &f),
            ]),
        ));
        checks.push(identity_check(
            format!("trial {trial}: alternating-sum inverse route"),
            &compare_series(&reta_inverse_alternating(&g), &reta_inverse(&g)),
        ));
    }
    Ok(())
}

fn lemma35(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let max_n = args.n.unwrap_or(7);
    params.insert("n".to_string(), max_n.to_string());
    for n in 1..=max_n {
        let all = enumerate_nc(&GroundSet::first_n(n));
        let anchored: Vec<&SetPartition> =
            all.iter().filter(|p| p.same_block(1, n as u32)).collect();
        let mut pairs_checked = 0usize;
        let mut failures = Vec::new();
        for p in &anchored {
            for blocks in 1..=p.block_count() {
                let formula = count_strongly_coarser(p, blocks)?;
                let brute = all
                    .iter()
                    .filter(|sigma| sigma.block_count() == blocks && p.strongly_refines(sigma))
                    .count() as u64;
                pairs_checked += 1;
                if formula != brute {
                    failures.push(format!(
                        "{p} with {blocks} blocks: formula {formula}, brute force {brute}"
                    ));
                }
            }
        }
        let detail = if failures.is_empty() {
            format!(
                "{} partitions scanned, {} anchored, {} (partition, block count) pairs agree",
                all.len(),
                anchored.len(),
                pairs_checked
            )
        } else {
            failures.join("; ")
        };
        checks.push(plain_check(
            format!("n = {n}: binomial count of strongly coarser partitions"),
            failures.is_empty(),
            detail,
        ));
    }
    Ok(())
}

fn boxtimes_homo(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(5);
    let grid = time_grid(args, &[(1, 2), (1, 1), (2, 1)])?;
    shape_params(params, args.k, degree, args.trials);
    params.insert("times".to_string(), grid_label(&grid));
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let mu = random_distribution(&mut rng, args.k, degree);
        let nu = random_distribution(&mut rng, args.k, degree);
        let one = Distribution::delta_one(args.k, degree);
        checks.push(identity_check(
            format!("trial {trial}: delta-one is a right identity"),
            &compare_series(mu.mult_convolve(&one).moments(), mu.moments()),
        ));
        for t in &grid {
            let report = boxtimes_bbp_check(&mu, &nu, t)?;
            checks.push(identity_check(
                format!("trial {trial}: semigroup respects mult-conv, t = {t}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn power_dilation(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(5);
    let grid = time_grid(args, &[(1, 2), (2, 1)])?;
    shape_params(params, args.k, degree, args.trials);
    params.insert("times".to_string(), grid_label(&grid));
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let mu = random_distribution(&mut rng, args.k, degree);
        let nu = random_distribution(&mut rng, args.k, degree);
        for t in &grid {
            let report = power_dilation_checks(&mu, &nu, t)?;
            checks.push(identity_check(
                format!("trial {trial}: powers slide through mult-conv, t = {t}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn brownian(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(6);
    let grid = time_grid(args, &[(1, 1), (1, 3)])?;
    shape_params(params, args.k, degree, args.trials);
    params.insert("times".to_string(), grid_label(&grid));
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let nu = random_distribution(&mut rng, args.k, degree);
        for t in &grid {
            let report = brownian_check(&nu, t)?;
            checks.push(identity_check(
                format!("trial {trial}: pairing formula, t = {t}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn phi_brownian(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(4);
    let grid = time_grid(args, &[(1, 2), (1, 1), (3, 1)])?;
    shape_params(params, args.k, degree, args.trials);
    params.insert("times".to_string(), grid_label(&grid));
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let nu = random_distribution(&mut rng, args.k, degree);
        for t in &grid {
            let report = phi_brownian_check(&nu, t)?;
            checks.push(identity_check(
                format!("trial {trial}: embedding intertwines, t = {t}"),
                &report,
            ));
        }
    }
    Ok(())
}

fn operator_model(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let degree = args.degree.unwrap_or(6);
    let tolerance = args.tolerance.unwrap_or(MODEL_MOMENT_TOL);
    shape_params(params, args.k, degree, args.trials);
    params.insert("tolerance".to_string(), format!("{tolerance:e}"));

    // d = 1, a = 0: the embedded point mass alternates 0, 1, 0, 1, ...
    let coin = model_input_from_json(&ModelInputJson {
        dim: 1,
        k: 1,
        matrices: vec![vec![vec![[0.0, 0.0]]]],
        state: vec![[1.0, 0.0]],
    })?;
    let model = OperatorModel::build(&coin);
    let mut worst = 0.0f64;
    for n in 1..=6usize {
        let expected = if n % 2 == 0 { 1.0 } else { 0.0 };
        let got = model.moment(&Word::new(vec![1u16; n]));
        worst = worst.max((got.re - expected).abs()).max(got.im.abs());
    }
    checks.push(plain_check(
        "one-dimensional closed form".to_string(),
        worst <= 1e-12,
        format!("worst defect {worst:.3e} against alternating 0, 1 moments"),
    ));
    checks.push(model_check(
        "one-dimensional exact pipeline".to_string(),
        &phi_model_check_with_tol(&coin, 6, 1e-12),
    ));

    // random Hermitian instances across the (dim, k) grid
    let mut rng = rng_from_seed(args.seed);
    for trial in 1..=args.trials {
        let d = 2 + (trial - 1) % 3;
        let k = 1 + (trial - 1) % 3;
        let input = random_hermitian_input(&mut rng, d, k);
        checks.push(model_check(
            format!("trial {trial}: embedded moments, dim = {d}, k = {k}"),
            &phi_model_check_with_tol(&input, degree, tolerance),
        ));
    }

    // exhaustive operator rules on fresh seeded instances
    let mut rng = rng_from_seed(args.seed);
    for k in 1..=2usize {
        let input = random_hermitian_input(&mut rng, 2, k);
        checks.push(model_check(
            format!("sandwich rule, k = {k}, inner words up to length 3"),
            &sandwich_check(&input, 3, 1e-12),
        ));
        checks.push(model_check(
            format!("vanishing patterns, k = {k}, products up to length 5"),
            &vanishing_check(&input, 5, 1e-12),
        ));
    }
    Ok(())
}

fn alpha_beta(
    args: &VerifyArgs,
    params: &mut BTreeMap<String, String>,
    checks: &mut Vec<CheckReport>,
) -> CliResult<()> {
    let max_n = args.n.unwrap_or(8);
    params.insert("n".to_string(), max_n.to_string());
    for n in 1..=max_n {
        let pairings = enumerate_nc_le2(&GroundSet::first_n(n));
        let mut failures = Vec::new();
        let mut image = BTreeSet::new();
        for rho in &pairings {
            let alpha = enclose_pairing(rho)?;
            let back = endpoint_pairing(&alpha)?;
            if back.as_partition() != rho.as_partition() {
                failures.push(format!("{} -> {alpha} -> {back}", rho.as_partition()));
            }
            image.insert(alpha);
        }
        // the image is exactly: non-crossing, 0 and n+1 together, no
        // singleton blocks
        let frame_ground =
            GroundSet::new((0..=(n as u32 + 1)).collect()).expect("contiguous range");
        let expected: BTreeSet<SetPartition> = enumerate_nc(&frame_ground)
            .into_iter()
            .filter(|p| p.same_block(0, n as u32 + 1) && p.blocks().iter().all(|b| b.len() >= 2))
            .collect();
        if image != expected {
            failures.push(format!(
                "image has {} partitions, characterization has {}",
                image.len(),
                expected.len()
            ));
        }
        for alpha in &expected {
            let rho = endpoint_pairing(alpha)?;
            let again = enclose_pairing(&rho)?;
            if &again != alpha {
                failures.push(format!("{alpha} -> {} -> {again}", rho.as_partition()));
            }
        }
        let detail = if failures.is_empty() {
            format!(
                "{} pairings round-trip; image matches all {} framed partitions",
                pairings.len(),
                expected.len()
            )
        } else {
            failures.join("; ")
        };
        checks.push(plain_check(
            format!("n = {n}: pairing/partition bijection"),
            failures.is_empty(),
            detail,
        ));
    }
    Ok(())
}
