mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Packing colorings of subdivided graphs: build, solve, verify, check.
#[derive(Debug, Parser)]
#[command(name = "pcn", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph from a family spec such as "fssd(corona(complete:3,path:2),m=1)".
    Construct {
        spec: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Exact packing chromatic number.
    Chi {
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, value_enum, default_value_t = Order::Degree)]
        order: Order,
        #[arg(long)]
        parallel: bool,
        /// Write the witness coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a coloring; prints one `u v color distance` line per violation.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Write an explicit coloring of one of the closed-form families.
    Pattern {
        #[arg(value_enum)]
        name: PatternName,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Base graph spec for `fssd-bipartite`.
        #[arg(long)]
        base: Option<String>,
        #[arg(short, long)]
        out: PathBuf,
        /// Also write the colored graph.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Run claim checks and write a JSON report.
    Check {
        /// `all` or a single claim id.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_m: Option<u32>,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Graphviz export, optionally annotated with a coloring.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Seconds per solver run; 0 means unlimited.
    #[arg(long, env = "PCN_TIME_BUDGET")]
    pub time_budget: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Order {
    Degree,
    Ecc,
    Input,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PatternName {
    FssdComplete,
    FssdCycle,
    FssdBipartite,
    KnCorona,
    CnCorona,
    SplitCycle,
    SplitComplete,
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const INVALID: u8 = 2;
    pub const TIMEOUT: u8 = 3;
    pub const CLAIM_FAIL: u8 = 4;
    pub const ONLY_SKIPS: u8 = 5;
    pub const USAGE: u8 = 64;
    pub const IO: u8 = 66;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
