//! Command-line front end for `qir-core`.
//!
//! ```text
//! qir saturate --d 2
//! qir verify --config campaign.cfg --out results/
//! qir verify --point argmin.json
//! qir sweep --state bell:2 --x comp:2 --y fourier:2 --grid 0:1:0.05 --out trace.csv
//! qir minimize --relation eq11 --dA 2 --dB 2 --restarts 50 --seed 7
//! ```
//!
//! Exit codes: 0 success, 1 tolerance violation, 2 usage or config error,
//! 3 theorem violation.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qir_core::relations::DEFAULT_TOL;

mod commands;
pub mod output;

use output::Unit;

/// Environment variable overriding the default tolerance (nats).
pub const TOL_ENV: &str = "QIR_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "qir",
    version,
    about = "Entropic uncertainty and irreality of observables"
)]
pub struct Cli {
    /// Show entropies in bits on stdout. Files are always in nats.
    #[arg(long, global = true)]
    pub bits: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profiles and relation reports for the maximally entangled and
    /// maximally mixed states with a mutually unbiased pair.
    Saturate {
        #[arg(long)]
        d: usize,
    },
    /// Run a verification campaign, or replay one saved point.
    Verify {
        /// Campaign config file.
        #[arg(long, required_unless_present = "point", conflicts_with = "point")]
        config: Option<PathBuf>,
        /// Output directory for the campaign.
        #[arg(long, requires = "config")]
        out: Option<PathBuf>,
        /// Worker threads; results do not depend on this.
        #[arg(long)]
        workers: Option<usize>,
        /// Argmin file written by `minimize`.
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Trace irreality of X along the monitoring path M_Y^ε.
    Sweep {
        /// State token (bell:d, mixed:dA,dB, werner:w, haar:..., induced:...) or JSON file.
        #[arg(long)]
        state: String,
        /// Basis token (comp:d, fourier:d, haar:d,seed) or JSON file.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// start:stop:step
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search pure states and bases for the smallest slack of a relation.
    Minimize {
        #[arg(long)]
        relation: String,
        #[arg(long = "dA")]
        d_a: usize,
        #[arg(long = "dB")]
        d_b: usize,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the replayable argmin.
        #[arg(long, default_value = "argmin.json")]
        out: PathBuf,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, config or input files.
    Usage(String),
    /// A check exceeded its tolerance.
    Tolerance(String),
    /// A relation that must hold was violated.
    Theorem(String),
    /// Numerical or internal failure.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Tolerance(_) => 1,
            CliError::Usage(_) | CliError::Runtime(_) => 2,
            CliError::Theorem(_) => 3,
        }
    }

    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Usage(format!("{}: {e}", path.display()))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Tolerance(m) => write!(f, "tolerance violation: {m}"),
            CliError::Theorem(m) => write!(f, "theorem violation: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<qir_core::Error> for CliError {
    fn from(e: qir_core::Error) -> Self {
        use qir_core::Error as E;
        match e {
            E::TheoremViolation { .. } => CliError::Theorem(e.to_string()),
            E::NoConvergence(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Default tolerance, or the value of `QIR_TOL` when set.
pub fn resolve_tol() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t >= 0.0 && t.is_finite() => Ok(t),
            _ => Err(CliError::Usage(format!(
                "{TOL_ENV}=`{s}` is not a nonnegative number"
            ))),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let unit = if cli.bits { Unit::Bits } else { Unit::Nats };
    let tol = resolve_tol()?;
    match cli.command {
        Command::Saturate { d } => commands::saturate(d, tol, unit),
        Command::Verify {
            point: Some(point), ..
        } => commands::verify_point(&point, tol, unit),
        Command::Verify {
            config: Some(config),
            out,
            workers,
            ..
        } => {
            let out = out.ok_or_else(|| CliError::Usage("verify --config needs --out".into()))?;
            commands::verify(&config, &out, workers, tol, unit)
        }
        Command::Verify { .. } => Err(CliError::Usage("verify needs --config or --point".into())),
        Command::Sweep {
            state,
            x,
            y,
            grid,
            out,
        } => commands::sweep(&state, &x, &y, &grid, &out, unit),
        Command::Minimize {
            relation,
            d_a,
            d_b,
            restarts,
            seed,
            out,
        } => commands::minimize(&relation, d_a, d_b, restarts, seed, &out, tol, unit),
    }
}

/// Parses `std::env::args`, runs, and maps the outcome to an exit code.
pub fn main_with_args() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
