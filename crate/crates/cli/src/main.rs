//! `vwmatch` command line: benchmark runs, matching verification, and
//! synthetic graph generation.
//!
//! Exit codes: 0 success, 1 usage error (also: invalid matching in
//! `verify`), 2 I/O or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use vwmatch_cli::experiment::{config_echo, run_experiment, write_csv, AlgorithmId, ExperimentError, RunConfig};
use vwmatch_cli::generate::{cycle_graph, gnm_graph, grid_graph, path_graph};
use vwmatch_cli::io::{parse_graph, read_matching, write_edge_list, GraphFormat};
use vwmatch_cli::weightgen::WeightMode;
use vwmatch_core::verify::verify_matching;
use vwmatch_core::Graph;

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;

#[derive(Parser)]
#[command(
    name = "vwmatch",
    about = "Exact and approximate vertex-weighted matching benchmarks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Mtx,
    Edgelist,
}

impl FormatArg {
    fn to_format(self) -> GraphFormat {
        match self {
            FormatArg::Mtx => GraphFormat::MatrixMarket,
            FormatArg::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Path,
    Cycle,
    Grid,
    Gnm,
}

#[derive(Subcommand)]
enum Command {
    /// Run selected algorithms over seeded random weights and write a CSV.
    Run {
        /// Graph file to read.
        #[arg(long)]
        input: PathBuf,
        /// Input format; inferred from the extension when omitted
        /// (".mtx" means Matrix Market, anything else an edge list).
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Comma-separated algorithms: exact-mvm, twothirds-mvm, half-mvm,
        /// greedy-mem, gpa-mem, rr, gpa-rr, random-improve.
        #[arg(long)]
        algos: String,
        /// Weight distribution, int:LO:HI or real:LO:HI.
        #[arg(long)]
        weights: String,
        /// Number of trials; trial t draws weights from seed SEED+t.
        #[arg(long)]
        trials: u64,
        /// Base seed for weight generation.
        #[arg(long)]
        seed: u64,
        /// Local-search quality parameter in (0, 2/3).
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        /// Compute gaps against the brute-force optimum (small graphs only).
        #[arg(long)]
        oracle: bool,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a matching file against a graph; prints VALID or INVALID.
    Verify {
        /// Graph file to read.
        #[arg(long)]
        input: PathBuf,
        /// Input format; inferred from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Matching file: one "u v" pair per line, # comments allowed.
        #[arg(long)]
        matching: PathBuf,
    },
    /// Write a synthetic graph as an edge list.
    Gen {
        /// Graph family.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Requested vertex count (grid uses the nearest r×c shape).
        #[arg(long)]
        n: usize,
        /// Edge count (gnm only).
        #[arg(long)]
        m: Option<usize>,
        /// Random seed (used by gnm; accepted and ignored elsewhere).
        #[arg(long)]
        seed: u64,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Run {
            input,
            format,
            algos,
            weights,
            trials,
            seed,
            epsilon,
            oracle,
            out,
        } => cmd_run(&input, format, &algos, &weights, trials, seed, epsilon, oracle, &out),
        Command::Verify { input, format, matching } => cmd_verify(&input, format, &matching),
        Command::Gen { kind, n, m, seed, out } => cmd_gen(kind, n, m, seed, &out),
    }
}

fn load_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph, ExitCode> {
    match parse_graph(path, format.map(FormatArg::to_format)) {
        Ok(g) => {
            if g.dropped_self_loops() + g.dropped_duplicates() > 0 {
                eprintln!(
                    "note: dropped {} self-loop(s) and {} duplicate edge(s)",
                    g.dropped_self_loops(),
                    g.dropped_duplicates()
                );
            }
            Ok(g)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(EXIT_IO))
        }
    }
}

fn parse_algos(list: &str) -> Result<Vec<AlgorithmId>, String> {
    let mut algos = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let algo = AlgorithmId::parse(name).ok_or_else(|| {
            let known: Vec<&str> = AlgorithmId::ALL.iter().map(|a| a.name()).collect();
            format!("unknown algorithm '{name}' (known: {})", known.join(", "))
        })?;
        if !algos.contains(&algo) {
            algos.push(algo);
        }
    }
    if algos.is_empty() {
        return Err("no algorithms selected".to_string());
    }
    Ok(algos)
}

#[allow(clippy::too_many_arguments)]
fn cmd_run(
    input: &Path,
    format: Option<FormatArg>,
    algos: &str,
    weights: &str,
    trials: u64,
    seed: u64,
    epsilon: f64,
    oracle: bool,
    out: &Path,
) -> ExitCode {
    let algorithms = match parse_algos(algos) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mode: WeightMode = match weights.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let graph = match load_graph(input, format) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let cfg = RunConfig {
        graph_name: input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "graph".to_string()),
        algorithms,
        mode,
        trials,
        base_seed: seed,
        epsilon,
        use_oracle: oracle,
    };
    println!("{}", config_echo(&graph, &cfg));
    let reports = match run_experiment(&graph, &cfg) {
        Ok(r) => r,
        Err(e @ (ExperimentError::OracleTooLarge { .. }
        | ExperimentError::InvalidEpsilon(_)
        | ExperimentError::NoTrials)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = write_csv(&reports, out) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return ExitCode::from(EXIT_IO);
    }
    println!("wrote {} rows to {}", reports.len(), out.display());
    ExitCode::SUCCESS
}

fn cmd_verify(input: &Path, format: Option<FormatArg>, matching_path: &Path) -> ExitCode {
    let graph = match load_graph(input, format) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match read_matching(matching_path, &graph) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_IO)
        }
        Ok(Err(defect)) => {
            println!("INVALID: {defect}");
            ExitCode::from(EXIT_USAGE)
        }
        Ok(Ok(matching)) => {
            debug_assert!(verify_matching(&graph, &matching));
            println!("VALID: {} pair(s)", matching.cardinality());
            ExitCode::SUCCESS
        }
    }
}

fn cmd_gen(kind: KindArg, n: usize, m: Option<usize>, seed: u64, out: &Path) -> ExitCode {
    let graph = match kind {
        KindArg::Path => path_graph(n),
        KindArg::Cycle => cycle_graph(n),
        KindArg::Grid => grid_graph(n),
        KindArg::Gnm => {
            let Some(m) = m else {
                eprintln!("error: --kind gnm requires --m");
                return ExitCode::from(EXIT_USAGE);
            };
            match gnm_graph(n, m, seed) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
        }
    };
    if let Err(e) = write_edge_list(&graph, out) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return ExitCode::from(EXIT_IO);
    }
    let kind_name = match kind {
        KindArg::Path => "path",
        KindArg::Cycle => "cycle",
        KindArg::Grid => "grid",
        KindArg::Gnm => "gnm",
    };
    println!(
        "generated {kind_name} graph: n={} m={} -> {}",
        graph.vertex_count(),
        graph.edge_count(),
        out.display()
    );
    ExitCode::SUCCESS
}
