//! `irrgen`: verify certificates, search for irredundant generating
//! sequences, propagate bounds and query small groups.

mod commands;
mod resolve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "irrgen", version, about = "Irredundant generating sequences of permutation groups")]
struct Cli {
    /// Print `key=value` lines instead of the report.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every claim of a certificate file.
    Verify {
        /// Certificate path, or the name of a shipped certificate (M11, M12).
        certificate: String,
    },
    /// Scan pools of elements for irredundant generating sequences.
    Search(Box<SearchArgs>),
    /// Propagate m and i bounds through a maximal-subgroup table.
    Bounds {
        /// Table path, or the name of a shipped table.
        table: String,
        /// Certified lower bound on m(G).
        #[arg(long)]
        m_lower: Option<u32>,
    },
    /// Brute-force m(G) and i(G) of a small group.
    Oracle {
        /// `cyclic(n)`, `symmetric(n)`, `alternating(n)`, `dihedral(2n)` or
        /// `product(a, b)`.
        spec: String,
        /// Also compute m(G,C) and i(G,C) for every class C.
        #[arg(long)]
        classes: bool,
        #[arg(long, default_value_t = irredundant::oracle::ORACLE_CAP)]
        cap: u64,
    },
    /// Orders k for which the group contains a dihedral subgroup of order 2k.
    Dihedral {
        /// Catalog name or oracle spec.
        group: String,
    },
    /// Conjugacy classes with sizes and representatives.
    Classes {
        /// Catalog name or oracle spec.
        group: String,
    },
}

#[derive(Args)]
pub struct SearchArgs {
    /// Catalog name; with `--gens`, the name written to certificates.
    pub group: String,
    #[arg(long)]
    pub size: usize,
    /// Scan elements of this order.
    #[arg(long, conflicts_with = "class")]
    pub pool_order: Option<u64>,
    /// Scan the members of this conjugacy class.
    #[arg(long)]
    pub class: Option<String>,
    /// Comma-separated orders allowed for the tail element.
    #[arg(long, value_delimiter = ',')]
    pub tails: Option<Vec<u64>>,
    /// Shuffle the pool with this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Stop after this many combinations; accepts `10^6`.
    #[arg(long, value_parser = commands::parse_count)]
    pub limit: Option<u128>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Progress line cadence in combinations; 0 turns it off.
    #[arg(long, default_value_t = 5000)]
    pub progress_every: u128,
    /// Generators as `;`-separated cycle strings, replacing the catalog.
    #[arg(long, requires = "degree")]
    pub gens: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub max_certs: usize,
    /// Certificate output path; further certificates get `-2`, `-3`, ...
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { certificate } => commands::verify(&certificate),
        Command::Search(args) => commands::search(&args),
        Command::Bounds { table, m_lower } => commands::bounds(&table, m_lower),
        Command::Oracle { spec, classes, cap } => commands::oracle(&spec, classes, cap),
        Command::Dihedral { group } => commands::dihedral(&group),
        Command::Classes { group } => commands::classes(&group),
    };
    result.emit(cli.machine)
}
