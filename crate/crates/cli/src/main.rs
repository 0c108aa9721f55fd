//! `actool`: command-line front end for the acgroups toolkit.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
//! error, 3 a search ran out of budget or exhausted its bounded space.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by randomized commands when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "actool", version, about = "Exact Andrews-Curtis group computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,

    /// Seed for randomized commands.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct AlphabetArgs {
    /// Number of x-generators; inferred from the input when omitted.
    #[arg(long)]
    pub r: Option<u32>,
    /// Number of conjugator generators y; inferred when omitted.
    #[arg(long)]
    pub s: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fox derivative of a word.
    Fox {
        #[arg(long)]
        wrt: String,
        #[arg(long)]
        word: String,
    },
    /// Fox Jacobian and Bachmuth matrix of a move sequence.
    Jacobian {
        #[arg(long)]
        transform: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Projective 2x2 image of a move sequence over the alphabet (2, m).
    Nu {
        #[arg(long)]
        transform: String,
        #[arg(long, default_value_t = 1)]
        kappa: u32,
        /// Number of conjugators; inferred when omitted.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Applies a move sequence to a tuple.
    Act {
        #[arg(long)]
        transform: String,
        #[arg(long)]
        tuple: String,
        /// Number of conjugators; inferred when omitted.
        #[arg(long)]
        s: Option<u32>,
    },
    /// Identity test of a move sequence, including the witness tuple.
    Witness {
        #[arg(long)]
        transform: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Checks a relation family, or a single move sequence with `--family word`.
    VerifyRelations {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// The move sequence checked by `--family word`.
        #[arg(long, required_if_eq("family", "word"))]
        transform: Option<String>,
        #[arg(long, default_value_t = 16)]
        k_max: u32,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        kappa: u32,
        /// Random words sampled by the a1m freeness check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Bounded search for an AC-trivialization of a pair in F2.
    Search {
        /// A pair "w1 ; w2".
        #[arg(long, conflicts_with_all = ["entry", "scramble"])]
        pair: Option<String>,
        /// Corpus file with lines "name: w1 ; w2"; the built-in AK corpus when omitted.
        #[arg(long, requires = "entry")]
        corpus: Option<std::path::PathBuf>,
        /// Corpus entry name.
        #[arg(long, conflicts_with = "scramble")]
        entry: Option<String>,
        /// Start from a random walk of this many moves from (x1, x2).
        #[arg(long)]
        scramble: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Expand frontiers on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Searches every small canonical pair with determinant +-1.
    Classify {
        /// Total length bound of the enumerated pairs.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Length cap used inside each search.
        #[arg(long, default_value_t = 16)]
        search_max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_nodes: u64,
    },
    /// Loads the Akbulut-Kirby pair AK(n) and runs a budgeted search on it.
    Ak {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        #[arg(long, default_value_t = 50_000)]
        max_nodes: u64,
        #[arg(long)]
        max_depth: Option<u32>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = 16)]
    pub max_len: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_nodes: u64,
    #[arg(long)]
    pub max_depth: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Q1,
    Q2,
    Commutator,
    A1m,
    Word,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.output));
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::Status::Usage as u8)
        }
    }
}
