//! Shared instance generators for the randomized integration tests.

#![allow(dead_code)]

use vwmatch_core::rng::SplitMix64;
use vwmatch_core::{Graph, Matching, VertexWeights};

/// Erdős–Rényi graph: each of the n·(n−1)/2 pairs kept with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range")
}

/// Uniform integer vertex weights in `[lo, hi]`.
pub fn random_weights_int(n: usize, lo: i64, hi: i64, rng: &mut SplitMix64) -> VertexWeights<i64> {
    assert!(0 <= lo && lo <= hi);
    let span = (hi - lo + 1) as u64;
    let w: Vec<i64> = (0..n).map(|_| lo + rng.next_below(span) as i64).collect();
    VertexWeights::new(w).expect("weights are non-negative")
}

/// Uniform integer edge weights in `[lo, hi]`, one per edge id.
pub fn random_edge_weights(g: &Graph, lo: i64, hi: i64, rng: &mut SplitMix64) -> Vec<i64> {
    assert!(0 <= lo && lo <= hi);
    let span = (hi - lo + 1) as u64;
    (0..g.edge_count())
        .map(|_| lo + rng.next_below(span) as i64)
        .collect()
}

/// A random valid matching: edges visited in random order, each matched with
/// probability 1/2 when both endpoints are still free.
pub fn random_matching(g: &Graph, rng: &mut SplitMix64) -> Matching {
    let mut matching = Matching::new(g.vertex_count());
    let mut order: Vec<u32> = (0..g.edge_count() as u32).collect();
    vwmatch_core::rng::fisher_yates(&mut order, rng);
    for e in order {
        let (u, v) = g.endpoints(e);
        if !matching.is_matched(u) && !matching.is_matched(v) && rng.next_below(2) == 0 {
            matching.match_pair(u, v);
        }
    }
    matching
}
