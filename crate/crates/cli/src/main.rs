mod commands;
mod coords;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

/// Trace coordinates, Fricke-space membership and seeded verification.
///
/// Numeric arguments accept decimals, `p/q` rationals and, where complex
/// values make sense, `a+bi`.
#[derive(Parser)]
#[command(name = "sl2char", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace polynomial of a word, e.g. `trace-poly "X Y x y"`.
    TracePoly {
        word: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        rank: u8,
    },
    /// Evaluates a word on a pair or triple built from its character.
    EvalWord {
        word: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        rank: u8,
        /// `x=..,y=..,z=..` for rank 2; `t1,t2,t3,t12,t13,t23` for rank 3.
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// Matrices realizing a character.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// `x=..,y=..,z=..` or `t1=..,t2=..,t3=..,t12=..,t13=..,t23=..`.
        coords: String,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// Fricke-space predicates.
    Fricke {
        #[command(subcommand)]
        action: FrickeAction,
    },
    /// Traces of the one-holed torus from Fenchel–Nielsen coordinates.
    Fn2trace {
        #[arg(long)]
        l: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        b: String,
    },
    /// Character-ring maps of covers and the rank-three deck involution.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Runs a seeded property suite and exits nonzero on failure.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Decimal or `p/q`.
        #[arg(long, default_value_t = 1e-8, value_parser = sl2char::scalar::parse_real)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = suites::Mode::Float)]
        mode: suites::Mode,
    },
}

#[derive(Subcommand)]
enum FrickeAction {
    /// Membership verdict with all intermediate quantities.
    Test {
        #[arg(value_enum)]
        surface: commands::Surface,
        /// Named (`x=-3,y=-3,z=-3`) or positional (`-3,-3,-3`) coordinates.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        /// Check the defining relation exactly over ℚ.
        #[arg(long)]
        exact: bool,
    },
    /// The four sign changes of `(x,y,z)`.
    Signs {
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Number of curves in a pants decomposition.
    Pants {
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        boundary: i64,
    },
}

#[derive(Subcommand)]
enum CoverAction {
    /// Prints, evaluates or symbolically checks a ring map.
    Map {
        #[arg(value_enum)]
        name: commands::MapName,
        /// Target coordinates, e.g. `p=1,q=2,r=-3`.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long)]
        symbolic_check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Pair,
    Triple,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for sl2char::chars::Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Self::Plus,
            BranchArg::Minus => Self::Minus,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] sl2char::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Math(_) => 1,
        }
    }
}

/// What a command prints, in both formats, and whether it succeeded.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::TracePoly { word, rank } => commands::trace_poly(&word, rank.into()),
        Command::EvalWord {
            word,
            rank,
            at,
            branch,
        } => commands::eval_word(&word, rank.into(), &at, branch.into()),
        Command::Construct {
            kind,
            coords,
            branch,
        } => match kind {
            ConstructKind::Pair => commands::construct_pair(&coords),
            ConstructKind::Triple => commands::construct_triple(&coords, branch.into()),
        },
        Command::Fricke { action } => match action {
            FrickeAction::Test {
                surface,
                coords,
                exact,
            } => commands::fricke_test(surface, &coords, exact),
            FrickeAction::Signs { coords } => commands::fricke_signs(&coords),
            FrickeAction::Pants { genus, boundary } => commands::pants(genus, boundary),
        },
        Command::Fn2trace { l, tau, b } => commands::fn2trace(&l, &tau, &b),
        Command::Cover { action } => match action {
            CoverAction::Map {
                name,
                eval,
                symbolic_check,
            } => commands::cover_map(name, eval.as_deref(), symbolic_check),
        },
        Command::Verify {
            suite,
            trials,
            seed,
            tolerance,
            mode,
        } => suites::run(
            suite,
            &suites::SuiteConfig {
                seed,
                trials,
                tolerance,
                mode,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            let out = if json {
                serde_json::to_string_pretty(&report.json).expect("json")
            } else {
                report.text.trim_end().to_string()
            };
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = writeln!(std::io::stdout(), "{out}");
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json {
                let v = serde_json::json!({ "error": e.to_string(), "code": e.exit_code() });
                let _ = writeln!(
                    std::io::stdout(),
                    "{}",
                    serde_json::to_string_pretty(&v).expect("json")
                );
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
