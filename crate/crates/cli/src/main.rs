//! `genus-forge`: tables, distributions, verification suites and Monte Carlo
//! runs for the genus of random polygon gluings.

mod commands;
mod output;
mod suites;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use genus_forge::montecarlo::{Boundary, McConfig};
use genus_forge::oracle::DEFAULT_ORACLE_LIMIT;

use commands::{Failure, Method};
use output::{Format, Table};
use suites::{Suite, SuiteParams};

#[derive(Parser, Debug)]
#[command(
    name = "genus-forge",
    version,
    about = "Exact genus distribution of random polygon gluings"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// Largest n the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "GENUS_FORGE_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Add approximate decimal columns with this many digits.
    #[arg(long, global = true)]
    decimal: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of gluings of each genus, for n = 1..=n-max.
    GenusTable {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value = "stirling")]
        method: Method,
    },
    /// Exact law of the vertex count for one n.
    Dist {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "stirling")]
        method: Method,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Largest symmetric group degree for character and Fourier checks.
        #[arg(long = "N-max", default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=10))]
        big_n_max: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Monte Carlo estimate compared with the exact law.
    Mc {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "fixed")]
        boundary: BoundaryArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundaryArg {
    Fixed,
    Unicyclic,
}

fn emit(table: &Table, format: Format) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    table
        .write(format, &mut lock)
        .and_then(|_| lock.flush())
        .map_err(|e| Failure::Check(format!("writing output: {e}")))
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::GenusTable { n_max, method } => {
            let (table, agree) = commands::genus_table(*n_max as usize, *method, cli.oracle_limit)?;
            emit(&table, cli.format)?;
            if !agree {
                return Err(Failure::Check("routes disagree".into()));
            }
        }
        Command::Dist { n, method } => {
            let table = commands::dist(*n as usize, *method, cli.oracle_limit, cli.decimal)?;
            emit(&table, cli.format)?;
        }
        Command::Verify {
            suite,
            n_max,
            big_n_max,
            seed,
        } => {
            let params = SuiteParams {
                n_max: *n_max as usize,
                big_n_max: *big_n_max as usize,
                seed: *seed,
                oracle_limit: cli.oracle_limit,
            };
            let report = suites::run(*suite, &params);
            emit(report.table(), cli.format)?;
            let tally = suites::status_counts(&report);
            eprintln!("{} passed, {} failed", tally["pass"], tally["fail"]);
            if !report.failures().is_empty() {
                return Err(Failure::Check(report.failures().join("\n")));
            }
        }
        Command::Mc {
            n,
            samples,
            seed,
            boundary,
        } => {
            let mut config = McConfig::new(*n as usize, *samples, *seed);
            config.boundary = match boundary {
                BoundaryArg::Fixed => Boundary::Fixed,
                BoundaryArg::Unicyclic => Boundary::UniformUnicyclic,
            };
            let (table, report) = commands::mc(&config, cli.decimal)?;
            emit(&table, cli.format)?;
            if !report.mean_within(commands::MC_SIGMA_BAND) {
                return Err(Failure::Check(format!(
                    "empirical mean is {:.2} standard errors from the exact mean",
                    report.mean_z_score()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("genus-forge: check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("genus-forge: {msg}");
            ExitCode::from(2)
        }
    }
}
