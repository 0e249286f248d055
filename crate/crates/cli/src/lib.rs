//! Command-line front end for `ore-elim`.
//!
//! Three subcommands: `eliminate` computes the eliminant of two parsed
//! polynomials, `bench` times direct against modular elimination on random
//! inputs, and `verify` runs the acceptance suite.

pub mod bench;
pub mod error;
pub mod job;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

pub use error::CliError;
use error::{EXIT_OK, EXIT_USAGE};
use job::{cmd_eliminate, parse_ring, JobSpec, Method};

#[derive(Debug, Parser)]
#[command(
    name = "ore-elim",
    version,
    about = "Elimination for bivariate Ore polynomials over finite fields"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, env = "ORE_ELIM_SEED", default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for parallel evaluation (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eliminate x2 from a pair of polynomials.
    Eliminate {
        /// Field, e.g. `GF(2^4)` or `GF(3^2; modulus = t^2 + 1)`.
        #[arg(long)]
        field: String,
        /// Exponent e of sigma1 = Frobenius^e.
        #[arg(long, default_value_t = 0)]
        sigma1: u32,
        /// Exponent e of sigma2 = Frobenius^e.
        #[arg(long, default_value_t = 0)]
        sigma2: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Time direct against modular elimination; writes CSV.
    Bench {
        #[arg(long, default_value = "GF(2^8)")]
        field: String,
        #[arg(long, default_value_t = 1)]
        sigma1: u32,
        #[arg(long, default_value_t = 1)]
        sigma2: u32,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Maximal x1-degree of each coefficient.
        #[arg(long, default_value_t = 2)]
        deg_x1: usize,
        /// Exact x2-degree of both inputs.
        #[arg(long, default_value_t = 2)]
        deg_x2: usize,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Verify {
        /// Restrict to these criteria, e.g. `--only A1,A7`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report_error(&e, cli.json);
            e.exit_code()
        }
    }
}

fn report_error(e: &CliError, as_json: bool) {
    let mut err = io::stderr().lock();
    if as_json {
        let v = json!({ "error": { "code": e.code(), "message": e.to_string(), "exit": e.exit_code() } });
        let _ = writeln!(err, "{v}");
    } else {
        let _ = writeln!(err, "error[{}]: {e}", e.code());
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        // a second initialisation in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Eliminate {
            field,
            sigma1,
            sigma2,
            f,
            g,
            method,
        } => {
            let job = JobSpec::parse(field, *sigma1, *sigma2, f, g, *method)?;
            let report = cmd_eliminate(&job)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Bench {
            field,
            sigma1,
            sigma2,
            trials,
            deg_x1,
            deg_x2,
            out: path,
        } => {
            let (ctx, s1, s2) = parse_ring(field, *sigma1, *sigma2)?;
            let cfg = bench::BenchConfig {
                ctx,
                sigma1: s1,
                sigma2: s2,
                trials: *trials,
                deg_x1: *deg_x1,
                deg_x2: *deg_x2,
                seed: cli.seed,
            };
            let rows = bench::cmd_bench(&cfg)?;
            match path {
                Some(p) => bench::write_csv(&rows, File::create(p)?)?,
                None if !cli.json => bench::write_csv(&rows, &mut out)?,
                None => {}
            }
            let (direct, modular) = bench::medians(&rows);
            if cli.json {
                let v = json!({
                    "rows": rows,
                    "median_direct_us": direct,
                    "median_modular_us": modular,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                eprintln!("median direct {direct} us, modular {modular} us");
            }
        }
        Command::Verify { only } => {
            let outcomes = verify::run_all(cli.seed, only);
            if outcomes.is_empty() {
                return Err(CliError::Usage(format!("no criterion matches {only:?}")));
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if cli.json {
                let v = json!({ "seed": cli.seed, "passed": failed == 0, "outcomes": outcomes });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{}", o.line())?;
                }
                writeln!(
                    out,
                    "{} of {} passed (seed {})",
                    outcomes.len() - failed,
                    outcomes.len(),
                    cli.seed
                )?;
            }
            if failed > 0 {
                return Err(CliError::VerifyFailed {
                    failed,
                    total: outcomes.len(),
                });
            }
        }
    }
    Ok(())
}
