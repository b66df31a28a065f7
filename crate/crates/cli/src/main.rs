//! `qint`: verify, search for and classify connected non-bipartite
//! Q-integral graphs of bounded signless-Laplacian spectral radius.
//!
//! Exit codes: 0 on success or an exhausted search, 2 when a search hit its
//! vertex cap, 3 on bad input, 1 on any other failure.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qint_core::search::PruningMode;

#[derive(Parser, Debug)]
#[command(name = "qint", version, about = "Exact tools for Q-integral graphs")]
struct Cli {
    /// Worker threads for the search and enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Leave the timing field out of reports, making them byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Directory for exported data files.
    #[arg(long, global = true, env = "QINT_DATA_DIR", default_value = "data")]
    data_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Connectivity, bipartiteness, degrees and the exact Q-spectrum of graphs.
    Verify {
        /// graph6 file (one graph per line), edge-list file, or `-` for stdin.
        #[arg(required_unless_present = "g6")]
        input: Option<String>,
        /// A graph6 string given on the command line.
        #[arg(long, conflicts_with = "input")]
        g6: Option<String>,
    },
    /// Run the vertex-extension search from a scenario or a seed graph file.
    Search {
        /// Scenario id (see `qint scenarios`) or a seed graph file.
        seed: String,
        #[arg(long)]
        rho: Option<u32>,
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = Pruning::DeficientOne)]
        pruning: Pruning,
        #[arg(long)]
        no_dedup: bool,
        /// Float distance from a threshold below which decisions are made exactly.
        #[arg(long, default_value_t = qint_core::feasibility::DEFAULT_ESCALATION_MARGIN)]
        margin: f64,
        /// Fix the ambient degree of a seed-file vertex, as `VERTEX=DEGREE`.
        #[arg(long = "pin", value_parser = parse_pin)]
        pins: Vec<(usize, u32)>,
        /// Edge-degree cap for seed files (default `2 rho - 6`).
        #[arg(long)]
        edge_cap: Option<u32>,
    },
    /// The connected non-bipartite Q-integral graphs with radius at most rho.
    Classify {
        #[arg(long)]
        rho: u32,
        /// Cross-check against brute-force enumeration up to this many vertices (0 skips it).
        #[arg(long, default_value_t = 8)]
        oracle_nmax: usize,
    },
    /// Brute-force enumeration of Q-integral graphs with radius at most rho.
    Enumerate {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        rho: u32,
    },
    /// Graphviz DOT for a catalog id (`G1`..`G8`) or a graph file.
    ExportDot { graph: String },
    /// Write the catalog as `catalog.g6` and `catalog.json` into the data directory.
    ExportCatalog,
    /// List the search scenarios.
    Scenarios,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Pruning {
    DeficientOne,
    DeficientAny,
    Off,
}

impl From<Pruning> for PruningMode {
    fn from(p: Pruning) -> Self {
        match p {
            Pruning::DeficientOne => PruningMode::DeficientOne,
            Pruning::DeficientAny => PruningMode::DeficientAny,
            Pruning::Off => PruningMode::Off,
        }
    }
}

fn parse_pin(s: &str) -> Result<(usize, u32), String> {
    let (v, k) = s.split_once('=').ok_or_else(|| format!("expected VERTEX=DEGREE, found {s:?}"))?;
    Ok((v.trim().parse().map_err(|e| format!("vertex: {e}"))?, k.trim().parse().map_err(|e| format!("degree: {e}"))?))
}

/// How a command ended.
pub enum Outcome {
    /// A JSON report; `cap_hit` selects exit code 2.
    Report { report: report::Report, cap_hit: bool, failed: bool },
    /// Plain text for stdout.
    Text(String),
}

/// Command failure with its exit code.
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: 3, error: error.into() }
    }

    pub fn other(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: 1, error: error.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    let result = match cli.command {
        Command::Verify { input, g6 } => commands::verify(input.as_deref(), g6.as_deref()),
        Command::Search { seed, rho, max_vertices, pruning, no_dedup, margin, pins, edge_cap } => {
            let cfg = qint_core::search::SearchConfig { max_vertices, pruning_mode: pruning.into(), dedup: !no_dedup, exact_escalation_margin: margin };
            commands::search(&seed, rho, &cfg, &pins, edge_cap)
        }
        Command::Classify { rho, oracle_nmax } => commands::classify(rho, oracle_nmax),
        Command::Enumerate { nmax, rho } => commands::enumerate(nmax, rho),
        Command::ExportDot { graph } => commands::export_dot(&graph),
        Command::ExportCatalog => commands::export_catalog(&cli.data_dir),
        Command::Scenarios => commands::scenarios(),
    };
    match result {
        Ok(Outcome::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report { report, cap_hit, failed }) => {
            let elapsed = (!cli.no_timing).then(|| start.elapsed());
            let text = serde_json::to_string_pretty(&report.to_json(elapsed)).expect("reports serialize");
            emit(&(text + "\n"));
            if failed {
                ExitCode::from(1)
            } else if cap_hit {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}
