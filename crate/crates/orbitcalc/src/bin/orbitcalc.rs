use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use orbitcalc::cli::{
    cmd_irrep, cmd_orbit, cmd_roots, cmd_verify, cmd_verify_batch, CheckKind, OutputFormat,
    Report, RunConfig,
};
use orbitcalc::error::{Error, Result};

/// Root data, highest-weight representations, coadjoint orbit data, and
/// cotangent-bimodule verification for compact semisimple Lie algebras.
#[derive(Parser)]
#[command(name = "orbitcalc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Built-in algebra name (su2..su6, so3..so6, sums like su2+su2) or a
    /// path to an algebra spec JSON file.
    #[arg(long)]
    algebra: String,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Root counts, simple roots, and normalized triple residuals.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// Build the irreducible representation and compare with the oracles.
    Irrep {
        #[command(flatten)]
        common: Common,
        /// Dominant integral weight labels, one per simple root.
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        weight: Vec<i64>,
    },
    /// Momentum functional, dual element, and stabilizer decomposition.
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        weight: Vec<i64>,
    },
    /// Full verification pipeline; exit code 0 iff the verdict passes.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        weight: Vec<i64>,
        /// File with one weight per line (whitespace-separated labels);
        /// runs the pipeline for each and aggregates.
        #[arg(long, conflicts_with = "weight")]
        weights_file: Option<PathBuf>,
        /// Comma-separated subset of checks to run
        /// (roots,triples,irrep,orbit,struk,cotangent).
        #[arg(long)]
        checks: Option<String>,
    },
}

fn build_config(common: &Common, weight: Vec<i64>) -> Result<RunConfig> {
    let mut cfg = RunConfig::new(common.algebra.clone(), weight);
    cfg.format = OutputFormat::from_str(&common.format)?;
    cfg.output = common.output.clone();
    Ok(cfg)
}

fn parse_weights_file(path: &PathBuf) -> Result<Vec<Vec<i64>>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let labels: std::result::Result<Vec<i64>, _> =
            line.split_whitespace().map(|t| t.parse::<i64>()).collect();
        match labels {
            Ok(l) => out.push(l),
            Err(_) => {
                return Err(Error::Usage(format!(
                    "weights file line {}: cannot parse {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Usage("weights file contains no weights".into()));
    }
    Ok(out)
}

fn dispatch(cli: Cli) -> (Result<Report>, RunConfig) {
    match cli.command {
        Command::Roots { common } => match build_config(&common, Vec::new()) {
            Ok(cfg) => (cmd_roots(&cfg), cfg),
            Err(e) => (Err(e), RunConfig::new(common.algebra, Vec::new())),
        },
        Command::Irrep { common, weight } => match build_config(&common, weight) {
            Ok(cfg) => (cmd_irrep(&cfg), cfg),
            Err(e) => (Err(e), RunConfig::new(common.algebra, Vec::new())),
        },
        Command::Orbit { common, weight } => match build_config(&common, weight) {
            Ok(cfg) => (cmd_orbit(&cfg), cfg),
            Err(e) => (Err(e), RunConfig::new(common.algebra, Vec::new())),
        },
        Command::Verify {
            common,
            weight,
            weights_file,
            checks,
        } => {
            let cfg = match build_config(&common, weight) {
                Ok(mut cfg) => {
                    if let Some(list) = checks {
                        match list
                            .split(',')
                            .map(CheckKind::from_str)
                            .collect::<Result<Vec<_>>>()
                        {
                            Ok(parsed) => cfg.checks = parsed,
                            Err(e) => return (Err(e), cfg),
                        }
                    }
                    cfg
                }
                Err(e) => return (Err(e), RunConfig::new(common.algebra, Vec::new())),
            };
            match weights_file {
                Some(path) => match parse_weights_file(&path) {
                    Ok(weights) => (cmd_verify_batch(&cfg, &weights), cfg),
                    Err(e) => (Err(e), cfg),
                },
                None => {
                    if cfg.weight.is_empty() {
                        (
                            Err(Error::Usage(
                                "verify needs --weight or --weights-file".into(),
                            )),
                            cfg,
                        )
                    } else {
                        (cmd_verify(&cfg), cfg)
                    }
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, cfg) = dispatch(cli);
    let code = orbitcalc::cli::exit_code(&outcome);
    match outcome {
        Ok(report) => {
            if let Err(e) = report.write(&cfg) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
