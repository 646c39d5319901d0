//! `polar-census`: batch front end for the counts, degrees, comparison
//! checks, coincidence searches and the enumeration oracle.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod output;

use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{Emitter, Format};

#[derive(Debug, Parser)]
#[command(
    name = "polar-census",
    version,
    about = "Exact counts and degree checks for finite polar spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Rank.
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// Line parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    /// Top residue parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Largest rank on the grid (smallest is 3).
    #[arg(long)]
    pub n_max: u32,
    /// Values of s; e ranges over 0..=4 wherever admissible.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,9")]
    pub grid_s: Vec<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// |Delta_i| for every rank (or one), the peak and the step pattern.
    Census {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
    },
    /// Degrees of the five graphs on Delta_i.
    Degrees {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        /// all, kappa, chi, xi, mu, nu or lambda.
        #[arg(long, default_value = "all")]
        kind: String,
        /// Add kappa split by intersection dimension.
        #[arg(long)]
        decompose: bool,
    },
    /// Checks every comparison claim over a parameter grid.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Pairs i < j with |Delta_i| = |Delta_j| over a parameter grid.
    Search {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,9")]
        grid_s: Vec<u64>,
        /// Also report pairs whose kappa, chi or xi coincide.
        #[arg(long)]
        conjecture: bool,
        /// Test every pair instead of skipping those excluded by the bounds.
        #[arg(long)]
        no_prune: bool,
    },
    /// Enumerates an explicit classical polar space and measures degrees.
    Oracle {
        #[arg(long)]
        kind: String,
        /// Base field order (the Hermitian kinds use GF(q^2)).
        #[arg(long)]
        q: u32,
        #[arg(long)]
        rank: u32,
        /// Compare with the formulas; exit 1 on any mismatch.
        #[arg(long)]
        cross_check: bool,
        /// Base subspaces sampled per rank.
        #[arg(long, default_value_t = polar_oracle::DEFAULT_SAMPLE)]
        sample: usize,
        /// Write Delta_i for this rank to the export file.
        #[arg(long, requires = "export")]
        export_rank: Option<u32>,
        #[arg(long, requires = "export_rank")]
        export: Option<std::path::PathBuf>,
    },
}

/// Bad input: reported with the error's name, exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub type Outcome = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut em = Emitter::new(cli.format, BufWriter::new(stdout.lock()));
    let outcome = match cli.command {
        Command::Census { params, i } => commands::census(&mut em, &params, i),
        Command::Degrees {
            params,
            i,
            kind,
            decompose,
        } => commands::degrees(&mut em, &params, i, &kind, decompose),
        Command::Verify { grid } => commands::verify(&mut em, &grid),
        Command::Search {
            n_max,
            grid_s,
            conjecture,
            no_prune,
        } => commands::search(&mut em, n_max, grid_s, conjecture, !no_prune),
        Command::Oracle {
            kind,
            q,
            rank,
            cross_check,
            sample,
            export_rank,
            export,
        } => {
            let export = export_rank.zip(export);
            commands::oracle(&mut em, &kind, q, rank, cross_check, sample, export)
        }
    };
    let flushed = em.flush();
    match (outcome, flushed) {
        (Err(InputError(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
    }
}
