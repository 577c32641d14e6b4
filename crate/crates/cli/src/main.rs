mod config;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use msaw_core::analysis::{monte_carlo_reversal, perturbation_experiment, MonteCarloConfig};
use msaw_core::{generate_matrix, Method, Perturbation, RankOptions, ScenarioSpec};

use config::{
    load_matrix, load_weights, parse_methods, parse_tie, read_file, CliError, CliResult,
    OutputFormat, RunConfig, EXIT_IO,
};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  usage or malformed input (bad flag, unparsable CSV/JSON)
  3  I/O failure (missing or unreadable file, write error)
  4  validation failure (invalid matrix, weights or scenario, dimension mismatch, unknown label)
  5  numeric failure (eigenvector non-convergence, zero-norm column)";

#[derive(Parser)]
#[command(
    name = "msaw",
    version,
    about = "Rank candidate networks with Modified-SAW and classic MADM methods",
    after_help = EXIT_CODES
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank a decision matrix with one or more methods.
    #[command(after_help = EXIT_CODES)]
    Rank(RankArgs),
    /// Rank with every method and report Kendall tau agreement.
    #[command(after_help = EXIT_CODES)]
    Compare(RankArgs),
    /// Check orders for rank reversal after dropping or duplicating an alternative.
    #[command(after_help = EXIT_CODES)]
    Reversal(ReversalArgs),
    /// Generate a synthetic decision matrix as CSV.
    #[command(after_help = EXIT_CODES)]
    Gen(GenArgs),
}

#[derive(Args)]
struct MatrixArgs {
    /// `table2` for the built-in network matrix, or a CSV path.
    #[arg(long, default_value = "table2")]
    matrix: String,
    /// Comma-separated criterion directions (benefit|cost), in column order.
    #[arg(long)]
    directions: Option<String>,
    /// JSON sidecar mapping criterion names to directions.
    #[arg(long, conflicts_with = "directions")]
    criteria: Option<PathBuf>,
    /// `preset:<voip|video|besteffort>`, `printed:<service>`, `pairwise:<csv>` or a weights file.
    #[arg(long, default_value = "preset:voip")]
    weights: String,
    /// Tie policy for M-SAW: `mean` or `stable`.
    #[arg(long, default_value = "mean")]
    tie: String,
    /// M-SAW alpha (defaults to the number of alternatives).
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    common: MatrixArgs,
    /// Comma-separated methods: msaw, saw, wpm, topsis, ahp or all.
    #[arg(long)]
    method: Option<String>,
}

#[derive(Args)]
struct ReversalArgs {
    #[command(flatten)]
    common: MatrixArgs,
    #[arg(long, default_value = "all")]
    method: String,
    /// Alternative to remove.
    #[arg(long, group = "mode")]
    drop: Option<String>,
    /// Alternative to append an exact copy of.
    #[arg(long, group = "mode")]
    duplicate: Option<String>,
    /// Run this many random drop trials on generated matrices.
    #[arg(long, group = "mode")]
    montecarlo: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Scenario JSON for Monte-Carlo trials (defaults to the bundled example).
    #[arg(long)]
    scenario: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Scenario JSON (defaults to the bundled example).
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Overrides the scenario's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides instances_per_profile.
    #[arg(long)]
    instances: Option<usize>,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_config(common: &MatrixArgs, methods: &str) -> CliResult<RunConfig> {
    let matrix = load_matrix(
        &common.matrix,
        common.directions.as_deref(),
        common.criteria.as_deref(),
    )?;
    let weights = load_weights(&common.weights)?;
    if weights.len() != matrix.n_criteria() {
        return Err(msaw_core::Error::DimensionMismatch {
            what: "weight vector",
            expected: matrix.n_criteria(),
            got: weights.len(),
        }
        .into());
    }
    Ok(RunConfig {
        matrix,
        weights,
        methods: parse_methods(methods)?,
        options: RankOptions {
            tie: parse_tie(&common.tie)?,
            alpha: common.alpha,
        },
        format: common.format,
    })
}

fn load_scenario(path: Option<&std::path::Path>) -> CliResult<ScenarioSpec> {
    match path {
        Some(p) => ScenarioSpec::from_json(&read_file(p)?)
            .map_err(|e| CliError::from(e).with_context(p.display())),
        None => Ok(ScenarioSpec::example()),
    }
}

fn cmd_rank(args: &RankArgs, compare: bool) -> CliResult<String> {
    let default = if compare { "all" } else { "msaw" };
    let cfg = run_config(&args.common, args.method.as_deref().unwrap_or(default))?;
    if compare {
        let rep = msaw_core::agreement_report(&cfg.matrix, &cfg.weights, &cfg.methods, &cfg.options)?;
        return output::agreement(&rep, cfg.format);
    }
    let results = cfg
        .methods
        .iter()
        .map(|m| m.rank(&cfg.matrix, &cfg.weights, &cfg.options))
        .collect::<Result<Vec<_>, _>>()?;
    output::rankings(&results, cfg.format)
}

fn cmd_reversal(args: &ReversalArgs) -> CliResult<String> {
    if let Some(trials) = args.montecarlo {
        let weights = load_weights(&args.common.weights)?;
        let rep = monte_carlo_reversal(&MonteCarloConfig {
            trials,
            seed: args.seed,
            scenario: load_scenario(args.scenario.as_deref())?,
            weights,
            methods: parse_methods(&args.method)?,
            tie: parse_tie(&args.common.tie)?,
        })?;
        return output::monte_carlo(&rep, args.common.format);
    }
    let perturbation = match (&args.drop, &args.duplicate) {
        (Some(l), _) => Perturbation::drop(l.clone()),
        (_, Some(l)) => Perturbation::duplicate(l.clone()),
        _ => {
            return Err(CliError::usage(
                "one of --drop, --duplicate or --montecarlo is required",
            ))
        }
    };
    let cfg = run_config(&args.common, &args.method)?;
    let reports = cfg
        .methods
        .iter()
        .map(|&m: &Method| {
            perturbation_experiment(&cfg.matrix, &cfg.weights, m, &cfg.options, perturbation.clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    output::reversals(&reports, cfg.format)
}

fn cmd_gen(args: &GenArgs) -> CliResult<Option<String>> {
    let mut spec = load_scenario(args.spec.as_deref())?;
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    if let Some(k) = args.instances {
        spec.instances_per_profile = k;
    }
    let csv = generate_matrix(&spec)?.to_csv_string()?;
    match &args.out {
        Some(path) => {
            fs::write(path, csv).map_err(|e| CliError {
                code: EXIT_IO,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(None)
        }
        None => Ok(Some(csv)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rank(a) => cmd_rank(a, false).map(Some),
        Command::Compare(a) => cmd_rank(a, true).map(Some),
        Command::Reversal(a) => cmd_reversal(a).map(Some),
        Command::Gen(a) => cmd_gen(a),
    };
    match result {
        Ok(text) => {
            if let Some(text) = text {
                let mut out = io::stdout().lock();
                if out.write_all(text.as_bytes()).is_err() {
                    return ExitCode::from(EXIT_IO);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
