//! Command-line front end: problem files in, JSON reports out.

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
use error::EXIT_OK;

#[derive(Parser, Debug)]
#[command(
    name = "normality",
    version,
    about = "Finite normality certificates for power products of monomial ideals"
)]
pub struct Cli {
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Analytic spread of the product I_1 ... I_r.
    Spread { problem: PathBuf },

    /// Minimal generators of the integral closure of I^n.
    Closure {
        problem: PathBuf,
        /// Comma-separated n; defaults to (1, ..., 1).
        #[arg(long)]
        index: Option<String>,
    },

    /// Whether I^n is integrally closed.
    Check {
        problem: PathBuf,
        #[arg(long)]
        index: Option<String>,
    },

    /// Certify that every power product is integrally closed, or find a
    /// counterexample.
    Certify {
        problem: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        /// Frontier total degree; defaults to lambda - 1.
        #[arg(long)]
        ell: Option<u32>,
        /// Keep scanning after the first failure.
        #[arg(long)]
        exhaustive: bool,
    },

    /// Brute-force every |n| <= B and compare with the full certificate.
    Oracle {
        problem: PathBuf,
        /// Defaults to lambda + 3.
        #[arg(long)]
        max_total: Option<u32>,
    },

    /// Random complete reduction with window checks.
    Reductions {
        problem: PathBuf,
        /// Candidate length; defaults to lambda.
        #[arg(long)]
        length: Option<usize>,
        /// Joint type q_1,..,q_r to extract and check.
        #[arg(long = "type")]
        joint_type: Option<String>,
        /// Total-degree window LO..HI; defaults to lambda..lambda+3.
        #[arg(long)]
        window: Option<String>,
        /// Degree cap; defaults to 2 * (max generator degree) * (HI + r).
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        coeff_bound: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Full,
    Frontier,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spread { .. } => "spread",
            Command::Closure { .. } => "closure",
            Command::Check { .. } => "check",
            Command::Certify { .. } => "certify",
            Command::Oracle { .. } => "oracle",
            Command::Reductions { .. } => "reductions",
        }
    }

    pub fn problem_path(&self) -> &PathBuf {
        match self {
            Command::Spread { problem }
            | Command::Closure { problem, .. }
            | Command::Check { problem, .. }
            | Command::Certify { problem, .. }
            | Command::Oracle { problem, .. }
            | Command::Reductions { problem, .. } => problem,
        }
    }
}

/// Parse arguments, run, emit the report and return the exit status.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                error::EXIT_PARSE
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let start = Instant::now();
    let path = cli.command.problem_path();
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| CliError::Parse {
        line: 1,
        column: 1,
        message: format!("input is not UTF-8: {e}"),
    })?;
    let problem = problem::parse_problem(&text)?;
    let outcome = commands::execute(&cli.command, &problem)?;
    let timing = cli.timing.then(|| start.elapsed());
    let doc = report::Report::new(cli.command.name(), &bytes, &problem, outcome.result, timing);
    report::emit(&doc, cli.output.as_deref())?;
    Ok(outcome.exit_code)
}
