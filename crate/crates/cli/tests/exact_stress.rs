//! Exercises the exact solver on random graphs large enough to form deep
//! chains of nested blossom contractions.
//!
//! Each instance below once drove the solver into a corrupted state: a cycle
//! walk that stopped before rethreading the whole contracted blossom left
//! parent pointers that produced a self-crossing augmenting walk.  At these
//! sizes the brute-force oracle is far out of reach, so the checks lean on
//! independent structural verifiers instead: the result must be a valid
//! matching, it must admit no augmenting path (maximum cardinality), and all
//! four search-refinement configurations must land on the same weight vector.

use vwmatch_cli::generate::gnm_graph;
use vwmatch_cli::weightgen::generate_int_weights;
use vwmatch_core::mvm::{exact_mvm_with_options, ExactOptions};
use vwmatch_core::verify::{has_augmenting_path, verify_matching, WeightVector};
use vwmatch_core::SortedGraph;

/// `(n, m, graph seed, weight seed)` instances with dense blossom activity.
const HARD_INSTANCES: &[(usize, usize, u64, u64)] = &[
    (2000, 6000, 4, 2),
    (3000, 9000, 3, 2),
    (4000, 12000, 1, 2),
    (4000, 20000, 2, 5),
    (6000, 18000, 4, 3),
    (6000, 48000, 1, 6),
];

#[test]
fn exact_solver_survives_blossom_heavy_instances() {
    for &(n, m, graph_seed, weight_seed) in HARD_INSTANCES {
        let graph = gnm_graph(n, m, graph_seed).unwrap();
        let weights = generate_int_weights(n, 1, 1000, weight_seed);
        let sorted = SortedGraph::build(&graph, &weights).unwrap();

        let mut vectors = Vec::new();
        for reuse in [false, true] {
            for stop in [false, true] {
                let matching = exact_mvm_with_options(
                    &sorted,
                    ExactOptions {
                        reuse_failed_searches: reuse,
                        stop_at_next_weight: stop,
                    },
                );
                assert!(
                    verify_matching(&graph, &matching),
                    "invalid matching on n={n} m={m} gs={graph_seed} ws={weight_seed}"
                );
                assert!(
                    !has_augmenting_path(&graph, &matching),
                    "non-maximum matching on n={n} m={m} gs={graph_seed} ws={weight_seed}"
                );
                vectors.push(WeightVector::from_matching(&matching, &weights));
            }
        }
        for v in &vectors[1..] {
            assert_eq!(
                *v, vectors[0],
                "refinements disagree on n={n} m={m} gs={graph_seed} ws={weight_seed}"
            );
        }
    }
}
