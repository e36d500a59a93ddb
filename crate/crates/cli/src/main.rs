//! `neuralcanon`: canonical forms of polarized neural ideals from the
//! command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "neuralcanon",
    version,
    about = "Canonical forms of polarized neural ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Ambient width; overrides `n =` headers and the largest index seen.
    #[arg(long, global = true, value_name = "N")]
    pub n: Option<usize>,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print extra detail to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file, or `-` for stdin. Read from stdin when omitted.
    pub file: Option<PathBuf>,

    /// Inline generators, e.g. "x1*y2, x3*y1".
    #[arg(long, conflicts_with = "file", value_name = "LIST")]
    pub gens: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Recompose only at singly shared indices.
    Fast,
    /// Decompose, drop Boolean primes, intersect.
    Full,
    /// Run both and require agreement.
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Splitting,
    Transversal,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the canonical form.
    Canon {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Strategy::Fast)]
        strategy: Strategy,
        /// Same as `--strategy fast`.
        #[arg(long, conflicts_with_all = ["strategy", "full"])]
        fast: bool,
        /// Same as `--strategy full`.
        #[arg(long, conflicts_with = "strategy")]
        full: bool,
    },
    /// Decide canonicity by the pairwise test. Exit 0 canonical, 1 not
    /// canonical, 2 hypotheses not met.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// List the minimal primes.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Splitting)]
        method: Method,
    },
    /// Print generators in polarized form (`(1-xK)` becomes `yK`).
    Polarize {
        #[command(flatten)]
        input: Input,
    },
    /// Print generators as pseudomonomials (`yK` becomes `(1-xK)`).
    Depolarize {
        #[command(flatten)]
        input: Input,
    },
    /// Brute-force canonical form from the code of an ideal, or from a code
    /// file with `--code`.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Read a code: one binary word per line.
        #[arg(long)]
        code: bool,
    },
    /// Closed-form canonical forms of chain, cycle and spread families.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Generic canonical form over placeholders `zJ`, optionally specialized.
    Generic {
        #[command(flatten)]
        input: Input,
        /// Image of a placeholder, e.g. `z1=x2*x4`. Give one per placeholder.
        #[arg(long = "sub", value_name = "zJ=MONOMIAL")]
        subs: Vec<String>,
        /// Number of placeholders; overrides `k =` headers.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// (x1 g1, x2 y1 g2, .., y_{k-1} gk).
    Chain {
        k: usize,
        /// The monomials g1..gk, in order; all 1 when omitted.
        #[arg(long = "g", value_name = "MONOMIAL")]
        gs: Vec<String>,
    },
    /// (x1 yk g1, x2 y1 g2, .., xk y_{k-1} gk), k >= 3.
    Cycle {
        k: usize,
        #[arg(long = "g", value_name = "MONOMIAL")]
        gs: Vec<String>,
    },
    /// (x1..xk g, y_B1 g1, .., y_Bs gs) for a partition B1..Bs of 1..k.
    Spread {
        /// Blocks separated by `;`, members by `,`, e.g. "1,2;3".
        #[arg(long)]
        blocks: String,
        /// The monomial on the long generator.
        #[arg(long, default_value = "1")]
        g: String,
        /// The block monomials, in block order; all 1 when omitted.
        #[arg(long = "gb", value_name = "MONOMIAL")]
        gs: Vec<String>,
        /// Exchange x and y on the reserved indices.
        #[arg(long)]
        reversed: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(commands::run(&cli))
}
