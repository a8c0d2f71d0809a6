//! Command-line front end. `run` never exits the process; it returns the
//! exit code and writes to the given streams.

mod checks;
mod commands;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dsl::{self, Definitions, DslError};

pub use checks::{run_all, CheckLine};
pub use table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    Z,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
}

#[derive(Parser, Debug)]
#[command(
    name = "g2chern",
    version,
    about = "Exact Chern-class calculus for G2-homogeneous five-folds"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Definition file to use instead of the builtin one.
    #[arg(long, global = true)]
    defs: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the defined spaces.
    Spaces,
    /// Total Chern class of a space.
    Chern { space: String },
    /// The seven Chern numbers of a five-fold.
    Numbers { space: String },
    /// Chern-number table for the twistor pair (z) or the quadric family (q).
    Table {
        #[arg(value_enum)]
        which: TableId,
    },
    /// Hilbert polynomial of the twistor space with its sample values.
    Hilbert {
        #[arg(long, default_value_t = 10)]
        samples: u32,
    },
    /// Case analysis of the possible Fano indices.
    Rigidity,
    /// Conjugate the almost complex structure along a fibre.
    Flip {
        space: String,
        /// A bundle name over the space or a class expression.
        #[arg(long, allow_hyphen_values = true)]
        fiber: String,
        /// Fibre rank; defaults to the top nonzero degree of the class.
        #[arg(long)]
        rank: Option<u32>,
    },
    /// The square of flips of the quadric.
    Square {
        /// Vertical class on Q.
        #[arg(long, default_value = "h", allow_hyphen_values = true)]
        t: String,
    },
    /// Evaluate an expression on a space.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        space: String,
    },
    /// Run every verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Comparisons with values in the literature.
    Audit,
}

/// A failed invocation: exit code plus one diagnostic line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub detail: String,
    /// Output produced before the failure, still written to stdout.
    pub stdout: String,
}

impl Failure {
    pub fn usage(detail: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind: "usage_error",
            detail: detail.into(),
            stdout: String::new(),
        }
    }

    pub fn check(detail: impl Into<String>) -> Self {
        Failure {
            code: 3,
            kind: "check_failure",
            detail: detail.into(),
            stdout: String::new(),
        }
    }

    pub fn line(&self) -> String {
        format!("g2chern: {}: {}", self.kind, self.detail.replace(['\n', '\r'], " "))
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        Failure {
            code: 2,
            kind: "parse_error",
            detail: e.to_string(),
            stdout: String::new(),
        }
    }
}

pub(crate) struct Context {
    pub format: Format,
    pub defs: Definitions,
}

impl Context {
    pub fn space(&self, name: &str) -> Result<&crate::charclass::Space, Failure> {
        let name = if name == "PT*S6" { "PTstarS6" } else { name };
        self.defs
            .space(name)
            .ok_or_else(|| Failure::usage(format!("unknown space {name}")))
    }
}

fn load_defs(path: Option<&PathBuf>) -> Result<Definitions, Failure> {
    match path {
        None => Ok(dsl::load(dsl::BUILTIN)?),
        Some(p) => {
            let src = std::fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            Ok(dsl::load(&src)?)
        }
    }
}

fn dispatch(cli: Cli) -> Result<String, Failure> {
    let ctx = Context {
        format: cli.format,
        defs: load_defs(cli.defs.as_ref())?,
    };
    match cli.command {
        Command::Spaces => commands::spaces(&ctx),
        Command::Chern { space } => commands::chern(&ctx, &space),
        Command::Numbers { space } => commands::numbers(&ctx, &space),
        Command::Table { which } => commands::table(&ctx, which),
        Command::Hilbert { samples } => commands::hilbert(&ctx, samples),
        Command::Rigidity => commands::rigidity(&ctx),
        Command::Flip { space, fiber, rank } => commands::flip(&ctx, &space, &fiber, rank),
        Command::Square { t } => commands::square(&ctx, &t),
        Command::Eval { expr, space } => commands::eval(&ctx, &expr, &space),
        Command::Check { suite: Suite::All } => checks::check_all(&ctx),
        Command::Audit => commands::audit(&ctx),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "{}", Failure::usage(first).line());
            return 1;
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = out.write_all(f.stdout.as_bytes());
            let _ = writeln!(err, "{}", f.line());
            f.code
        }
    }
}
