//! `latnoether`: command-line front end for the lattice, cohomology, flabby
//! resolution and monomial action libraries.
//!
//! Exit codes: 0 for a definite positive answer, 1 for a definite negative
//! answer, 2 for an unknown verdict and 3 for input errors.

pub mod commands;
pub mod error;
pub mod input;
pub mod paper;
pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::CliError;
pub use input::{load_document, DocKind, Document};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "latnoether", version, about = "Integral lattices over finite groups: cohomology, flabby classes, monomial actions")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for subgroup sweeps and per-prime checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct LatticeInput {
    /// Lattice document (JSON).
    #[arg(long)]
    pub lattice: Option<PathBuf>,
    /// Catalog lattice instead of a document.
    #[arg(long, conflicts_with = "lattice")]
    pub catalog: Option<String>,
    /// Catalog parameter `key=value`; repeatable.
    #[arg(long = "param", value_parser = parse_key_value, requires = "catalog")]
    pub params: Vec<(String, String)>,
}

fn parse_key_value(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ĥ⁻¹, Ĥ⁰ and H¹ on every subgroup class.
    Cohomology {
        #[command(flatten)]
        input: LatticeInput,
        /// Only the subgroup with this key (e.g. `2.1`).
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Flabby / coflabby test; exits 0 when both hold.
    Classify {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// A flabby resolution `0 → M → P → E → 0`.
    Resolve {
        #[command(flatten)]
        input: LatticeInput,
        /// Use the smaller fixed-point cover instead of all subgroup classes.
        #[arg(long)]
        minimal: bool,
    },
    /// Invertibility of the flabby class.
    Rho {
        #[command(flatten)]
        input: LatticeInput,
        /// Do not divide out the kernel of the action first.
        #[arg(long)]
        no_reduce: bool,
    },
    /// Search for a permuted basis.
    Cert {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// Decomposition of a C₂-lattice into sign, trivial and regular summands.
    Reiner {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// Check a monomial action against its relations.
    #[command(name = "monomial-verify")]
    MonomialVerify {
        /// Monomial action document (JSON).
        #[arg(long)]
        action: PathBuf,
        /// Print the exponent lattice.
        #[arg(long)]
        exponent_lattice: bool,
        /// Lattice document the exponent lattice must equal.
        #[arg(long)]
        expect_lattice: Option<PathBuf>,
    },
    /// Checks of the worked examples.
    Paper {
        #[command(subcommand)]
        which: paper::PaperCommand,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(code: i32, stdout: String) -> Outcome {
        Outcome { code, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(EXIT_YES, text),
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match commands::dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
