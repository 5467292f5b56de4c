//! Command-line verification front end.
//!
//! Exit codes: 0 all checks pass, 1 check failure, 2 invalid input,
//! 3 missing registry fact. Defaults come from `TREG_CONFIG` (key=value
//! file) when set; flags override.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use treg::commands;
use treg::report::render_reports;
use treg::Config;

#[derive(Parser)]
#[command(name = "treg")]
#[command(about = "Divisor/tame-symbol calculus and regulator verification on products of elliptic curves")]
struct Cli {
    /// Quadrature tolerance override
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Monte Carlo seed override
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Monte Carlo sample count override
    #[arg(long, global = true)]
    mc_n: Option<u64>,

    /// Write the JSON (or CSV) artifact here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tame/higher-tame/boundary-squared suites of a corpus
    VerifyTame {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Run the reciprocity suites of a corpus
    VerifyReciprocity {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Complete a precycle instance to a ledger with empty divisor
    Complete {
        #[arg(long)]
        corpus: PathBuf,
        /// Instance id inside the corpus
        #[arg(long)]
        target: String,
    },
    /// Integrate one case and cross-check it against the seeded oracle
    Integrate {
        /// eta1-f1 | eta1-f2 | eta2-f1 | eta2-f2 | disk-unit
        #[arg(long)]
        case: String,
        /// Run the Monte Carlo oracle alone
        #[arg(long)]
        oracle_only: bool,
    },
    /// Fill the 2x2 pairing matrix and report the determinant verdict
    Surjectivity,
    /// Flat-norm physics: Laplacian residuals and periodicity
    Harmonicity,
    /// Regenerate the shipped corpus files from the builders
    CorpusGen {
        #[arg(long, default_value = "corpus")]
        out_dir: PathBuf,
    },
}

fn effective_config(cli: &Cli) -> Config {
    let mut cfg = Config::from_env();
    if let Some(tol) = cli.tol {
        cfg.tol = tol;
    }
    if let Some(seed) = cli.seed {
        cfg.mc_seed = seed;
    }
    if let Some(n) = cli.mc_n {
        cfg.mc_n = n;
    }
    cfg
}

fn emit(cli: &Cli, text: String) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = effective_config(&cli);
    let run = || -> treg::Result<i32> {
        match &cli.command {
            Command::VerifyTame { corpus } => {
                let (reports, code) = commands::cmd_verify_tame(corpus, &cfg)?;
                emit(&cli, render_reports(&reports))?;
                Ok(code)
            }
            Command::VerifyReciprocity { corpus } => {
                let (reports, code) = commands::cmd_verify_reciprocity(corpus, &cfg)?;
                emit(&cli, render_reports(&reports))?;
                Ok(code)
            }
            Command::Complete { corpus, target } => {
                let (value, code) = commands::cmd_complete(corpus, target, &cfg)?;
                let mut text = serde_json::to_string_pretty(&value).expect("serializes");
                text.push('\n');
                emit(&cli, text)?;
                Ok(code)
            }
            Command::Integrate { case, oracle_only } => {
                let (value, code) = commands::cmd_integrate(case, &cfg, *oracle_only)?;
                let mut text = serde_json::to_string_pretty(&value).expect("serializes");
                text.push('\n');
                emit(&cli, text)?;
                Ok(code)
            }
            Command::Surjectivity => {
                let (report, code) = commands::cmd_surjectivity(&cfg)?;
                let text = if cli.format == Format::Csv {
                    report.to_csv()
                } else {
                    let mut t = serde_json::to_string_pretty(&report).expect("serializes");
                    t.push('\n');
                    t
                };
                emit(&cli, text)?;
                Ok(code)
            }
            Command::Harmonicity => {
                let (value, code) = commands::cmd_harmonicity(&cfg)?;
                let mut text = serde_json::to_string_pretty(&value).expect("serializes");
                text.push('\n');
                emit(&cli, text)?;
                Ok(code)
            }
            Command::CorpusGen { out_dir } => {
                commands::cmd_corpus_gen(out_dir)?;
                Ok(0)
            }
        }
    };
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code_for(&e) as u8)
        }
    }
}
