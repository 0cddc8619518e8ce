//! `antipowers` command-line front end.
//!
//! Exit codes: 0 success or property holds, 1 valid negative answer, 2 usage
//! error, 3 materialization cap exceeded, 4 witness budget exhausted.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "antipowers", version, about = "Powers and anti-powers in infinite words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    AntiPower,
    Power,
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ap,
    P,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a prefix of an infinite word.
    Generate {
        /// thue-morse, fibonacci, periodic:<seed>, sparse-avoider[:<a1>:<g>],
        /// recurrent-avoider or ultimately:<prefix>:<tail>
        word: String,
        length: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Materialization cap in symbols.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Shortest anti-power prefixes: one row (k, m, k*m) per order.
    ApTable {
        word: String,
        /// Orders, e.g. `3..20,30,50,100`.
        #[arg(long = "k", value_name = "LIST")]
        orders: String,
        /// Largest block length m tried.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Test a literal word or a generator prefix for powers or anti-powers.
    Check {
        /// `literal:<ascii>` or a generator name.
        target: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "anti-power")]
        mode: CheckMode,
        /// Prefix length for generator targets.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Compute N(l,k) by exhaustive search.
    SearchN {
        l: usize,
        k: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Longest word explored.
        #[arg(long, default_value_t = antipowers::ramsey::DEFAULT_LENGTH_CAP)]
        cap: usize,
        /// Search subtrees below this depth concurrently.
        #[arg(long, num_args = 0..=1, default_missing_value = "8")]
        parallel: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Table of N(l,k) over ranges of l and k, as CSV rows (l, k, N).
    SearchTable {
        #[arg(long = "l", value_name = "LIST")]
        powers: String,
        #[arg(long = "k", value_name = "LIST")]
        orders: String,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, default_value_t = antipowers::ramsey::DEFAULT_LENGTH_CAP)]
        cap: usize,
        #[arg(long, num_args = 0..=1, default_missing_value = "8")]
        parallel: Option<usize>,
    },
    /// Certify a u^l factor or report the k-anti-power prefixes.
    Witness {
        word: String,
        k: usize,
        l: usize,
        /// Largest block length m scanned.
        #[arg(long, default_value_t = antipowers::DEFAULT_WITNESS_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Prefix densities of AP(x,k) or P(x,k) up to a horizon.
    Density {
        word: String,
        k: usize,
        #[arg(long, value_enum, default_value = "ap")]
        kind: Kind,
        #[arg(long, default_value_t = 100)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
