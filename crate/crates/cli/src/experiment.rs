//! Experiment driver: run selected algorithms over seeded weight draws,
//! time them, and render the results as CSV.
//!
//! Per trial `t` the vertex weights come from seed `base + t`; every
//! algorithm then runs on the same assignment.  A timed section covers the
//! algorithm together with its own preprocessing (adjacency sorting for the
//! vertex-weighted solvers, the edge-weight reduction for the edge-weighted
//! ones) but never file parsing or weight generation.  After the data rows,
//! one aggregate row per algorithm carries geometric means; its time column
//! holds the geometric mean of per-trial runtimes *relative to the exact
//! solver* when that solver is part of the run, and of raw milliseconds
//! otherwise.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use vwmatch_core::matching::Matching;
use vwmatch_core::mem::{
    gpa_mem, greedy_mem, mvm_to_mem, phase_budget, random_improve_mem, round_robin_improve_mem,
};
use vwmatch_core::mvm::{exact_mvm, half_mvm, two_thirds_mvm};
use vwmatch_core::verify::{gap_percent, oracle_mvm_with_limit, DEFAULT_ORACLE_LIMIT};
use vwmatch_core::{Graph, SortedGraph, VertexWeights, Weight};

use crate::weightgen::{generate_int_weights, generate_real_weights, WeightMode};

/// The eight selectable algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmId {
    ExactMvm,
    TwoThirdsMvm,
    HalfMvm,
    GreedyMem,
    GpaMem,
    RoundRobin,
    GpaRoundRobin,
    RandomImprove,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 8] = [
        AlgorithmId::ExactMvm,
        AlgorithmId::TwoThirdsMvm,
        AlgorithmId::HalfMvm,
        AlgorithmId::GreedyMem,
        AlgorithmId::GpaMem,
        AlgorithmId::RoundRobin,
        AlgorithmId::GpaRoundRobin,
        AlgorithmId::RandomImprove,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::ExactMvm => "exact-mvm",
            AlgorithmId::TwoThirdsMvm => "twothirds-mvm",
            AlgorithmId::HalfMvm => "half-mvm",
            AlgorithmId::GreedyMem => "greedy-mem",
            AlgorithmId::GpaMem => "gpa-mem",
            AlgorithmId::RoundRobin => "rr",
            AlgorithmId::GpaRoundRobin => "gpa-rr",
            AlgorithmId::RandomImprove => "random-improve",
        }
    }

    pub fn parse(s: &str) -> Option<AlgorithmId> {
        AlgorithmId::ALL.into_iter().find(|a| a.name() == s)
    }

    /// Per-algorithm seed salt so the improvers' random streams differ from
    /// the weight stream and from each other within one trial.
    fn seed_salt(self) -> u64 {
        0x5851_F42D_4C95_7F2D_u64.wrapping_mul(self as u64 + 1)
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub graph_name: String,
    pub algorithms: Vec<AlgorithmId>,
    pub mode: WeightMode,
    pub trials: u64,
    pub base_seed: u64,
    pub epsilon: f64,
    pub use_oracle: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExperimentError {
    #[error("the oracle reference is limited to {limit} vertices, graph has {n}")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("epsilon must lie strictly between 0 and 2/3, got {0}")]
    InvalidEpsilon(f64),
    #[error("at least one trial is required")]
    NoTrials,
}

/// Trial tag: a data row's index, or the aggregate marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trial {
    Index(u64),
    Geomean,
}

/// A rendered-as-written numeric cell: integers stay undecorated, reals get
/// full 17-significant-digit scientific notation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
}

impl Value {
    fn render(self) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Real(r) => format!("{r:.16e}"),
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(i) => i as f64,
            Value::Real(r) => r,
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: &'static str,
    pub trial: Trial,
    pub seed: Option<u64>,
    pub weight: Value,
    pub cardinality: Value,
    pub time_ms: f64,
    pub gap_percent: Option<f64>,
}

/// Geometric mean; `None` for an empty slice, zero as soon as any factor is
/// not strictly positive (a zero gap collapses the product, and negative
/// values only arise from same-value float round-off, which means zero).
pub fn geometric_mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    if values.iter().any(|&v| v <= 0.0) {
        return Some(0.0);
    }
    Some((values.iter().map(|v| v.ln()).sum::<f64>() / values.len() as f64).exp())
}

/// One line summarizing the configuration, including the derived improvement
/// phase budget `k` (natural log in the budget formula).
pub fn config_echo(graph: &Graph, cfg: &RunConfig) -> String {
    let algos: Vec<&str> = cfg.algorithms.iter().map(|a| a.name()).collect();
    let k = match phase_budget(cfg.epsilon) {
        Ok(k) => k.to_string(),
        Err(_) => "invalid".to_string(),
    };
    format!(
        "config: graph={} n={} m={} algos={} weights={} trials={} seed={} epsilon={} k={} log=e oracle={}",
        cfg.graph_name,
        graph.vertex_count(),
        graph.edge_count(),
        algos.join(","),
        cfg.mode,
        cfg.trials,
        cfg.base_seed,
        cfg.epsilon,
        k,
        cfg.use_oracle,
    )
}

pub fn run_experiment(graph: &Graph, cfg: &RunConfig) -> Result<Vec<RunReport>, ExperimentError> {
    if cfg.trials == 0 {
        return Err(ExperimentError::NoTrials);
    }
    if !(cfg.epsilon > 0.0 && cfg.epsilon < 2.0 / 3.0) {
        return Err(ExperimentError::InvalidEpsilon(cfg.epsilon));
    }
    if cfg.use_oracle && graph.vertex_count() > DEFAULT_ORACLE_LIMIT {
        return Err(ExperimentError::OracleTooLarge {
            n: graph.vertex_count(),
            limit: DEFAULT_ORACLE_LIMIT,
        });
    }
    match cfg.mode {
        WeightMode::Int { lo, hi } => run_generic(
            graph,
            cfg,
            |n, seed| generate_int_weights(n, lo, hi, seed),
            Value::Int,
        ),
        WeightMode::Real { lo, hi } => run_generic(
            graph,
            cfg,
            |n, seed| generate_real_weights(n, lo, hi, seed),
            Value::Real,
        ),
    }
}

fn run_generic<W: Weight>(
    graph: &Graph,
    cfg: &RunConfig,
    gen_weights: impl Fn(usize, u64) -> VertexWeights<W>,
    make_value: impl Fn(W) -> Value,
) -> Result<Vec<RunReport>, ExperimentError> {
    let mut rows: Vec<RunReport> = Vec::new();
    // per-algorithm accumulators for the aggregate rows
    let count = cfg.algorithms.len();
    let mut weights_acc = vec![Vec::new(); count];
    let mut cards_acc = vec![Vec::new(); count];
    let mut times_acc = vec![Vec::new(); count];
    let mut gaps_acc = vec![Vec::new(); count];

    for t in 0..cfg.trials {
        let seed = cfg.base_seed.wrapping_add(t);
        let weights = gen_weights(graph.vertex_count(), seed);

        let mut matchings: Vec<(Matching, f64)> = Vec::with_capacity(count);
        for &algo in &cfg.algorithms {
            let start = Instant::now();
            let matching = run_algorithm(graph, &weights, algo, cfg.epsilon, seed);
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            matchings.push((matching, elapsed_ms));
        }

        // gap reference: the oracle when requested, else the exact solver's
        // weight from this same trial, else none
        let reference: Option<W> = if cfg.use_oracle {
            let opt = oracle_mvm_with_limit(graph, &weights, DEFAULT_ORACLE_LIMIT)
                .expect("oracle limit checked before the trial loop");
            Some(opt.max_weight)
        } else {
            cfg.algorithms
                .iter()
                .position(|&a| a == AlgorithmId::ExactMvm)
                .map(|i| matchings[i].0.vertex_weight(&weights))
        };

        for (i, &algo) in cfg.algorithms.iter().enumerate() {
            let (matching, elapsed_ms) = &matchings[i];
            let weight = matching.vertex_weight(&weights);
            let gap = reference.and_then(|opt| gap_percent(weight, opt));
            rows.push(RunReport {
                graph: cfg.graph_name.clone(),
                n: graph.vertex_count(),
                m: graph.edge_count(),
                algorithm: algo.name(),
                trial: Trial::Index(t),
                seed: Some(seed),
                weight: make_value(weight),
                cardinality: Value::Int(matching.cardinality() as i64),
                time_ms: *elapsed_ms,
                gap_percent: gap,
            });
            weights_acc[i].push(weight.as_f64());
            cards_acc[i].push(matching.cardinality() as f64);
            times_acc[i].push(*elapsed_ms);
            if let Some(g) = gap {
                gaps_acc[i].push(g);
            }
        }
    }

    // relative runtimes when the exact solver took part
    let exact_pos = cfg
        .algorithms
        .iter()
        .position(|&a| a == AlgorithmId::ExactMvm);
    for (i, &algo) in cfg.algorithms.iter().enumerate() {
        let times: Vec<f64> = match exact_pos {
            Some(e) => times_acc[i]
                .iter()
                .zip(times_acc[e].iter())
                .map(|(&t, &x)| t / x.max(1e-9))
                .collect(),
            None => times_acc[i].clone(),
        };
        let gaps = &gaps_acc[i];
        rows.push(RunReport {
            graph: cfg.graph_name.clone(),
            n: graph.vertex_count(),
            m: graph.edge_count(),
            algorithm: algo.name(),
            trial: Trial::Geomean,
            seed: None,
            weight: Value::Real(geometric_mean(&weights_acc[i]).unwrap_or(0.0)),
            cardinality: Value::Real(geometric_mean(&cards_acc[i]).unwrap_or(0.0)),
            time_ms: geometric_mean(&times).unwrap_or(0.0),
            gap_percent: if gaps.len() == cfg.trials as usize {
                geometric_mean(gaps)
            } else {
                None
            },
        });
    }
    Ok(rows)
}

fn run_algorithm<W: Weight>(
    graph: &Graph,
    weights: &VertexWeights<W>,
    algo: AlgorithmId,
    epsilon: f64,
    trial_seed: u64,
) -> Matching {
    let improver_seed = trial_seed ^ algo.seed_salt();
    match algo {
        AlgorithmId::ExactMvm => {
            let sorted = SortedGraph::build(graph, weights).expect("weights sized to the graph");
            exact_mvm(&sorted)
        }
        AlgorithmId::TwoThirdsMvm => {
            let sorted = SortedGraph::build(graph, weights).expect("weights sized to the graph");
            two_thirds_mvm(&sorted)
        }
        AlgorithmId::HalfMvm => {
            let sorted = SortedGraph::build(graph, weights).expect("weights sized to the graph");
            half_mvm(&sorted)
        }
        AlgorithmId::GreedyMem => greedy_mem(&mvm_to_mem(graph, weights)),
        AlgorithmId::GpaMem => gpa_mem(&mvm_to_mem(graph, weights)),
        AlgorithmId::RoundRobin => {
            let eg = mvm_to_mem(graph, weights);
            round_robin_improve_mem(&eg, &Matching::new(graph.vertex_count()), epsilon, improver_seed)
                .expect("epsilon validated before the trial loop")
        }
        AlgorithmId::GpaRoundRobin => {
            let eg = mvm_to_mem(graph, weights);
            let start = gpa_mem(&eg);
            round_robin_improve_mem(&eg, &start, epsilon, improver_seed)
                .expect("epsilon validated before the trial loop")
        }
        AlgorithmId::RandomImprove => {
            let eg = mvm_to_mem(graph, weights);
            random_improve_mem(&eg, &Matching::new(graph.vertex_count()), epsilon, improver_seed)
                .expect("epsilon validated before the trial loop")
        }
    }
}

pub const CSV_HEADER: &str = "graph,n,m,algorithm,trial,seed,weight,cardinality,time_ms,gap_percent";

pub fn render_csv(reports: &[RunReport]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let trial = match r.trial {
            Trial::Index(t) => t.to_string(),
            Trial::Geomean => "geomean".to_string(),
        };
        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
        let gap = r
            .gap_percent
            .map(|g| Value::Real(g).render())
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.graph,
            r.n,
            r.m,
            r.algorithm,
            trial,
            seed,
            r.weight.render(),
            r.cardinality.render(),
            Value::Real(r.time_ms).render(),
            gap
        )
        .expect("writing to a String cannot fail");
    }
    out
}

pub fn write_csv(reports: &[RunReport], path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_csv(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::path_graph;

    fn small_config(algorithms: Vec<AlgorithmId>) -> RunConfig {
        RunConfig {
            graph_name: "p6".to_string(),
            algorithms,
            mode: WeightMode::Int { lo: 1, hi: 100 },
            trials: 4,
            base_seed: 9,
            epsilon: 0.01,
            use_oracle: false,
        }
    }

    #[test]
    fn geometric_mean_rules() {
        assert_eq!(geometric_mean(&[]), None);
        assert!((geometric_mean(&[2.0, 8.0]).unwrap() - 4.0).abs() < 1e-12);
        assert!((geometric_mean(&[3.0, 3.0, 3.0]).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(geometric_mean(&[5.0, 0.0]), Some(0.0));
        assert_eq!(geometric_mean(&[5.0, -1e-13]), Some(0.0));
    }

    #[test]
    fn row_count_and_layout() {
        let g = path_graph(6);
        let cfg = small_config(vec![
            AlgorithmId::ExactMvm,
            AlgorithmId::TwoThirdsMvm,
            AlgorithmId::HalfMvm,
        ]);
        let rows = run_experiment(&g, &cfg).unwrap();
        // trials × algorithms data rows + one aggregate per algorithm
        assert_eq!(rows.len(), 4 * 3 + 3);
        let data = &rows[..12];
        assert!(data.iter().all(|r| matches!(r.trial, Trial::Index(_))));
        assert_eq!(data[0].seed, Some(9));
        assert_eq!(data[3].seed, Some(10)); // second trial, first algorithm
        let agg = &rows[12..];
        assert!(agg.iter().all(|r| r.trial == Trial::Geomean && r.seed.is_none()));
        // every data row carries a gap because the exact solver is present,
        // and the exact rows' gaps are all zero
        assert!(data.iter().all(|r| r.gap_percent.is_some()));
        assert!(data
            .iter()
            .filter(|r| r.algorithm == "exact-mvm")
            .all(|r| r.gap_percent == Some(0.0)));
        // exact's aggregate relative runtime is exactly 1
        let exact_agg = agg.iter().find(|r| r.algorithm == "exact-mvm").unwrap();
        assert!((exact_agg.time_ms - 1.0).abs() < 1e-12);
    }

    #[test]
    fn aggregates_recompute_from_data_rows() {
        let g = path_graph(10);
        let cfg = small_config(vec![AlgorithmId::HalfMvm, AlgorithmId::GpaMem]);
        let rows = run_experiment(&g, &cfg).unwrap();
        for algo in ["half-mvm", "gpa-mem"] {
            let data: Vec<&RunReport> = rows
                .iter()
                .filter(|r| r.algorithm == algo && matches!(r.trial, Trial::Index(_)))
                .collect();
            let agg = rows
                .iter()
                .find(|r| r.algorithm == algo && r.trial == Trial::Geomean)
                .unwrap();
            let ws: Vec<f64> = data.iter().map(|r| r.weight.as_f64()).collect();
            let expect = geometric_mean(&ws).unwrap();
            assert!((agg.weight.as_f64() - expect).abs() <= 1e-12 * expect.abs());
            // no exact solver here: aggregate time is the raw geomean
            let ts: Vec<f64> = data.iter().map(|r| r.time_ms).collect();
            let expect_t = geometric_mean(&ts).unwrap();
            assert!((agg.time_ms - expect_t).abs() <= 1e-9 * expect_t.abs().max(1.0));
            // no reference optimum: gaps absent everywhere
            assert!(data.iter().all(|r| r.gap_percent.is_none()));
            assert!(agg.gap_percent.is_none());
        }
    }

    #[test]
    fn oracle_flag_supplies_gaps_without_exact() {
        let g = path_graph(8);
        let mut cfg = small_config(vec![AlgorithmId::HalfMvm]);
        cfg.use_oracle = true;
        let rows = run_experiment(&g, &cfg).unwrap();
        assert!(rows
            .iter()
            .filter(|r| matches!(r.trial, Trial::Index(_)))
            .all(|r| r.gap_percent.is_some()));

        let big = path_graph(17);
        let err = run_experiment(&big, &cfg).unwrap_err();
        assert_eq!(err, ExperimentError::OracleTooLarge { n: 17, limit: 16 });
    }

    #[test]
    fn epsilon_and_trial_validation() {
        let g = path_graph(4);
        let mut cfg = small_config(vec![AlgorithmId::RoundRobin]);
        cfg.epsilon = 0.9;
        assert!(matches!(
            run_experiment(&g, &cfg).unwrap_err(),
            ExperimentError::InvalidEpsilon(_)
        ));
        let mut cfg = small_config(vec![AlgorithmId::HalfMvm]);
        cfg.trials = 0;
        assert_eq!(run_experiment(&g, &cfg).unwrap_err(), ExperimentError::NoTrials);
    }

    #[test]
    fn csv_rendering_rules() {
        assert_eq!(render_csv(&[]), format!("{CSV_HEADER}\n"));
        let row = RunReport {
            graph: "g".to_string(),
            n: 4,
            m: 3,
            algorithm: "half-mvm",
            trial: Trial::Index(0),
            seed: Some(7),
            weight: Value::Int(1_000_000),
            cardinality: Value::Int(2),
            time_ms: 1.5,
            gap_percent: None,
        };
        let out = render_csv(&[row.clone()]);
        let line = out.lines().nth(1).unwrap();
        assert!(line.starts_with("g,4,3,half-mvm,0,7,1000000,2,"));
        assert!(line.ends_with(',')); // absent gap renders as empty field
        let mut agg = row;
        agg.trial = Trial::Geomean;
        agg.seed = None;
        agg.weight = Value::Real(0.5);
        agg.gap_percent = Some(2.25);
        let out = render_csv(&[agg]);
        let line = out.lines().nth(1).unwrap();
        assert!(line.contains(",geomean,,"));
        assert!(line.contains("5.0000000000000000e-1"));
        assert!(line.ends_with("2.2500000000000000e0"));
    }

    #[test]
    fn identical_configs_differ_only_in_time() {
        let g = path_graph(12);
        let cfg = small_config(AlgorithmId::ALL.to_vec());
        let a = run_experiment(&g, &cfg).unwrap();
        let b = run_experiment(&g, &cfg).unwrap();
        let strip = |rows: &[RunReport]| -> Vec<RunReport> {
            rows.iter()
                .map(|r| RunReport {
                    time_ms: 0.0,
                    ..r.clone()
                })
                .collect()
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn echo_reports_phase_budget() {
        let g = path_graph(4);
        let cfg = small_config(vec![AlgorithmId::GpaRoundRobin]);
        let echo = config_echo(&g, &cfg);
        assert!(echo.contains("k=2"), "{echo}");
        assert!(echo.contains("log=e"), "{echo}");
        assert!(echo.contains("weights=int:1:100"), "{echo}");
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in AlgorithmId::ALL {
            assert_eq!(AlgorithmId::parse(a.name()), Some(a));
        }
        assert_eq!(AlgorithmId::parse("fancy-new"), None);
    }
}
