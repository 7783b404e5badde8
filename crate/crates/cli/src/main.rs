use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hgf_cli::views::{catalog_json, catalog_text, eval_series, EvalError, GroupView, OmegaView};
use hgf_cli::{exit, parse_ids, run_suite, SuiteConfig, SuiteError};
use hgf_core::field::{parse_rational, Rational};
use hgf_core::group::Family;

#[derive(Parser)]
#[command(name = "hgf", version, about = "Exact verification of terminating hypergeometric identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check catalog identities on seeded random samples.
    Verify(VerifyArgs),
    /// Evaluate one series, e.g. `2F1(-3, 1/2; 2; 4)`.
    Eval {
        series: String,
        /// Sum terms 0..=K only.
        #[arg(long, value_name = "K")]
        upto: Option<u64>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Print the invariance group certificate of a family.
    Group {
        /// One of T, Ttilde, R, Rtilde, Q, M.
        family: Family,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Tabulate limits over rows n and columns γ.
    Omega {
        #[arg(long, default_value_t = 6)]
        nmax: u64,
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        gamma_min: i64,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        gamma_max: i64,
        /// Tabulate the three-parameter limit at this `a`.
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// List catalog ids with their formulas and guards.
    Catalog {
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, or a comma list of ids and `A..B` ranges.
    #[arg(long, default_value = "all")]
    ids: String,
    #[arg(long, default_value_t = 200)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    nmax: u64,
    #[arg(long, default_value_t = 12)]
    numerator_bound: u32,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,5,7")]
    denominators: Vec<u32>,
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn write_json(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))
}

fn verify(args: VerifyArgs) -> Result<i32, Failure> {
    let usage = |e: SuiteError| Failure::Usage(e.to_string());
    let config = SuiteConfig {
        ids: parse_ids(&args.ids).map_err(usage)?,
        samples: args.samples,
        nmax: args.nmax,
        seed: args.seed,
        numerator_bound: args.numerator_bound,
        denominators: args.denominators,
        jobs: args.jobs,
    };
    config.validate().map_err(usage)?;
    let report = run_suite(&config).map_err(|e| Failure::Runtime(e.to_string()))?;
    print!("{}", report.to_text());
    if let Some(path) = &args.json {
        write_json(path, &report.to_json())?;
    }
    Ok(if report.passed() { exit::PASS } else { exit::FAILURE })
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Eval { series, upto, json } => {
            let view = eval_series(&series, upto).map_err(|e| match e {
                EvalError::Parse(m) => Failure::Usage(m),
                e => Failure::Runtime(e.to_string()),
            })?;
            println!("{} = {}", view.series, view.value);
            if let Some(l) = &view.limit {
                println!("at t = 0: {l}");
            }
            if let Some(path) = &json {
                write_json(path, &(serde_json::to_string_pretty(&view).expect("view serializes") + "\n"))?;
            }
            Ok(exit::PASS)
        }
        Command::Group { family, json } => {
            let view = GroupView::new(family).map_err(|e| Failure::Runtime(e.to_string()))?;
            print!("{}", view.to_text());
            if let Some(path) = &json {
                write_json(path, &view.to_json())?;
            }
            Ok(if view.certified() { exit::PASS } else { exit::FAILURE })
        }
        Command::Omega { nmax, gamma_min, gamma_max, a, json } => {
            if gamma_min > gamma_max {
                return Err(Failure::Usage("--gamma-min exceeds --gamma-max".into()));
            }
            let gammas: Vec<i64> = (gamma_min..=gamma_max).collect();
            let view = OmegaView::new(nmax, &gammas, a.as_ref());
            print!("{}", view.to_text());
            if let Some(path) = &json {
                write_json(path, &view.to_json())?;
            }
            Ok(if view.mismatches == 0 { exit::PASS } else { exit::FAILURE })
        }
        Command::Catalog { json } => {
            print!("{}", catalog_text());
            if let Some(path) = &json {
                write_json(path, &catalog_json())?;
            }
            Ok(exit::PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::PASS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            exit::USAGE
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            exit::FAILURE
        }
    };
    ExitCode::from(code as u8)
}
