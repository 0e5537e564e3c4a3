//! `polygf`: census, expansion, evaluation, fitting and verification from the
//! command line. Rationals are always printed exactly as `p/q` strings.

pub mod checks;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polygf", version, about = "Exact enumeration and generating functions of lattice polygons")]
pub struct Cli {
    /// Worker threads for the census and the denominator search.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate polygons up to a half-perimeter.
    Census {
        #[arg(long = "max")]
        max_half: u32,
        /// Include the subclass rows, not just the totals per concavity index.
        #[arg(long)]
        classify: bool,
        /// Raise the half-perimeter budget.
        #[arg(long)]
        limit: Option<u32>,
        /// Resumable progress file.
        #[arg(long)]
        snapshot: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Expand a catalogue generating function.
    Expand {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        order: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate an expression program.
    Eval {
        /// One of the bundled programs.
        #[arg(long, conflicts_with_all = ["expr_file", "expr"])]
        program: Option<String>,
        #[arg(long, conflicts_with = "expr")]
        expr_file: Option<PathBuf>,
        /// Program text, `vars:` line first.
        #[arg(long)]
        expr: Option<String>,
        #[arg(long, default_value_t = 10)]
        order: u32,
        /// Sum the x and y exponents into a single-variable series.
        #[arg(long)]
        isotropic: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fit a series to [A + B sqrt(1-4x)]/D, or search for D.
    Fit(FitArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Budget::Small)]
        budget: Budget,
    },
}

#[derive(Args, Debug)]
pub struct FitArgs {
    /// Coefficients, one `n value` per line, or series JSON.
    #[arg(long, conflicts_with = "name")]
    pub series: Option<PathBuf>,
    /// A univariate catalogue name instead of a file.
    #[arg(long)]
    pub name: Option<String>,
    /// Highest order taken from `--name`.
    #[arg(long, default_value_t = 99)]
    pub order: u32,
    /// Denominator, e.g. "(1-x)^5*(1-3x+x^2)^3*(1-4x)^3".
    #[arg(long, required_unless_present = "search")]
    pub ansatz: Option<String>,
    #[arg(long = "deg-a")]
    pub deg_a: u32,
    /// Omit to fit without the square-root part.
    #[arg(long = "deg-b")]
    pub deg_b: Option<u32>,
    /// Polynomial that must divide B, e.g. "1-2x+x^2" or "(1-x)^2*(1-3x+x^2)".
    #[arg(long = "forced-b")]
    pub forced_b: Option<String>,
    /// Coefficients held back for validation; default a quarter of them.
    #[arg(long)]
    pub holdout: Option<usize>,
    /// Search denominators over the basis x, 1-x, 1-2x, 1-3x+x^2, 1-4x.
    #[arg(long)]
    pub search: bool,
    /// Largest exponent of each basis factor, in basis order.
    #[arg(long = "max-exp", value_delimiter = ',', default_values_t = [1u32, 3, 1, 3, 4])]
    pub max_exp: Vec<u32>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Suite {
    Identities,
    CensusVsClosed,
    PaperConstants,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Budget {
    Small,
    Full,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(m: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: m.into() }
    }

    pub fn resource(m: impl Into<String>) -> Self {
        Failure { code: EXIT_RESOURCE, message: m.into() }
    }

    pub fn verify(m: impl Into<String>) -> Self {
        Failure { code: EXIT_VERIFY, message: m.into() }
    }
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
    }
    match commands::dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
