mod commands;
mod reports;
mod selftest;

use std::fmt;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skew_cyclic::skew_code::DEFAULT_GUARD;

#[derive(Parser, Debug)]
#[command(name = "skewcode", version, about = "Skew cyclic codes over F_p[u]/<u^k>")]
pub struct Cli {
    /// Characteristic (a prime).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Nilpotency index of u.
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Automorphism parameter, theta(u) = s*u.
    #[arg(long, global = true)]
    s: Option<u64>,
    /// Code length.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Largest enumeration the tool will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD, value_parser = clap::value_parser!(u64).range(1..))]
    guard: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print codeword vectors high degree first.
    #[arg(long, global = true)]
    descending: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 (or a given target) into two unit-leading factors.
    Factor {
        /// Degree of the left factor.
        #[arg(long)]
        d1: Option<usize>,
        /// Work modulo u^level; defaults to k.
        #[arg(long)]
        level: Option<usize>,
        /// Polynomial to factor instead of x^n - 1.
        #[arg(long)]
        target: Option<String>,
        /// Reproduce the factor families of x^4 - 1 over R_2 and their codes over R_3.
        #[arg(long)]
        table1: bool,
    },
    /// Classify a code and report its structure.
    Analyze {
        #[command(flatten)]
        code: CodeInput,
        /// Fail with the guard exit code when the minimum distance cannot be enumerated.
        #[arg(long)]
        require_distance: bool,
    },
    /// Encode a message.
    Encode {
        #[command(flatten)]
        code: CodeInput,
        /// Message document (JSON).
        #[arg(long, conflicts_with = "part")]
        message: Option<PathBuf>,
        /// Message polynomial, one per generator.
        #[arg(long)]
        part: Vec<String>,
    },
    /// Syndrome-decode a received word.
    Decode {
        #[command(flatten)]
        code: CodeInput,
        /// Received word: an encode report or a polynomial (JSON).
        #[arg(long, conflicts_with = "word")]
        received: Option<PathBuf>,
        /// Received word as a polynomial.
        #[arg(long)]
        word: Option<String>,
        /// Largest error weight in the syndrome table.
        #[arg(long, default_value_t = 1)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = Policy::CosetLeader)]
        policy: Policy,
        /// Also write the recovered message document here.
        #[arg(long)]
        message_out: Option<PathBuf>,
    },
    /// Recompute the golden reports and compare them with the fixtures.
    Selftest {
        /// Read fixtures from this directory instead of the built-in copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
pub struct CodeInput {
    /// Code document (JSON).
    #[arg(long, conflicts_with = "gen")]
    code: Option<PathBuf>,
    /// Generator polynomial; repeat for several.
    #[arg(long = "gen")]
    gen: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    Strict,
    CosetLeader,
}

#[derive(Debug)]
pub enum CliError {
    Lib(skew_cyclic::Error),
    Input(String),
    SelftestFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use skew_cyclic::Error as E;
        match self {
            Self::SelftestFailed(_) => 1,
            Self::Input(_) => 2,
            Self::Lib(e) => match e {
                E::MessageBound(_) => 3,
                E::GuardExceeded { .. } => 4,
                E::Uncorrectable(_) | E::SyndromeCollision(_) => 5,
                E::Inconsistent(_) => 1,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lib(skew_cyclic::Error::Uncorrectable(s)) => {
                write!(f, "uncorrectable: syndrome {s} is not in the table")
            }
            Self::Lib(e) => e.fmt(f),
            Self::Input(msg) => f.write_str(msg),
            Self::SelftestFailed(n) => write!(f, "{n} selftest check(s) failed"),
        }
    }
}

impl From<skew_cyclic::Error> for CliError {
    fn from(e: skew_cyclic::Error) -> Self {
        Self::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(output) => {
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().write_all(output.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
