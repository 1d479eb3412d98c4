//! Cross-checks the branch-and-bound oracles against a pruning-free
//! enumeration of *every* matching of the graph.
//!
//! The enumerator recurses on the smallest still-free vertex (leave it free,
//! or pair it with each free neighbor), so each matching is produced exactly
//! once and no bounding logic is shared with the oracles under test.

mod common;

use std::cmp::Ordering;

use common::{random_edge_weights, random_graph, random_weights_int};
use vwmatch_core::mem::EdgeWeightedGraph;
use vwmatch_core::rng::SplitMix64;
use vwmatch_core::verify::{oracle_mem, oracle_mvm, verify_matching, WeightVector};
use vwmatch_core::{Graph, Matching, Vertex, VertexWeights};

/// Folds `visit` over every matching of `g`, reusing one scratch matching.
fn for_each_matching(g: &Graph, visit: &mut impl FnMut(&Matching)) {
    fn recurse(g: &Graph, m: &mut Matching, from: Vertex, visit: &mut impl FnMut(&Matching)) {
        let n = g.vertex_count() as Vertex;
        let mut v = from;
        while v < n && m.is_matched(v) {
            v += 1;
        }
        if v >= n {
            visit(m);
            return;
        }
        recurse(g, m, v + 1, visit); // v stays unmatched
        let nbrs: Vec<Vertex> = g.neighbors(v).filter(|&u| u > v && !m.is_matched(u)).collect();
        for u in nbrs {
            m.match_pair(v, u);
            recurse(g, m, v + 1, visit);
            m.unmatch_pair(v, u);
        }
    }
    let mut m = Matching::new(g.vertex_count());
    recurse(g, &mut m, 0, visit);
}

struct NaiveMvm {
    best_vector: Vec<i64>,
    max_weight: i64,
    max_cardinality: usize,
}

fn naive_mvm(g: &Graph, w: &VertexWeights<i64>) -> NaiveMvm {
    let mut out = NaiveMvm {
        best_vector: Vec::new(),
        max_weight: 0,
        max_cardinality: 0,
    };
    for_each_matching(g, &mut |m| {
        let mut vec: Vec<i64> = m.matched_vertices().map(|v| w.get(v)).collect();
        vec.sort_unstable_by(|a, b| b.cmp(a));
        let sum: i64 = vec.iter().sum();
        out.max_weight = out.max_weight.max(sum);
        out.max_cardinality = out.max_cardinality.max(m.cardinality());
        let lex = {
            let common: Option<Ordering> = vec
                .iter()
                .zip(out.best_vector.iter())
                .map(|(a, b)| a.cmp(b))
                .find(|o| *o != Ordering::Equal);
            common.unwrap_or(vec.len().cmp(&out.best_vector.len()))
        };
        if lex == Ordering::Greater {
            out.best_vector = vec;
        }
    });
    out
}

fn naive_mem(instance: &EdgeWeightedGraph<'_, i64>) -> i64 {
    let mut best = 0i64;
    for_each_matching(instance.graph(), &mut |m| {
        best = best.max(instance.matching_weight(m));
    });
    best
}

#[test]
fn oracle_agrees_with_full_enumeration() {
    let mut instances = 0;
    for seed in 1000..1150 {
        let mut rng = SplitMix64::new(seed);
        for &p in &[0.25, 0.5, 0.9] {
            let n = 2 + rng.next_below(7) as usize; // 2..=8
            let g = random_graph(n, p, &mut rng);
            let w = random_weights_int(n, 0, 10, &mut rng);
            let naive = naive_mvm(&g, &w);
            let opt = oracle_mvm(&g, &w).unwrap();

            assert!(verify_matching(&g, &opt.matching), "seed {seed}");
            assert_eq!(opt.max_weight, naive.max_weight, "seed {seed}");
            assert_eq!(opt.max_cardinality, naive.max_cardinality, "seed {seed}");
            assert_eq!(
                opt.weight_vector.as_slice(),
                &naive.best_vector[..],
                "seed {seed}"
            );
            // the reported vector really is the reported matching's vector
            assert_eq!(
                WeightVector::from_matching(&opt.matching, &w),
                opt.weight_vector,
                "seed {seed}"
            );
            instances += 1;
        }
    }
    assert!(instances >= 300);
}

#[test]
fn oracle_handles_degenerate_weights() {
    for seed in 2000..2030 {
        let mut rng = SplitMix64::new(seed);
        let n = 2 + rng.next_below(6) as usize;
        let g = random_graph(n, 0.6, &mut rng);
        for w in [
            VertexWeights::new(vec![0i64; n]).unwrap(),
            VertexWeights::new(vec![7i64; n]).unwrap(),
        ] {
            let naive = naive_mvm(&g, &w);
            let opt = oracle_mvm(&g, &w).unwrap();
            assert_eq!(opt.max_weight, naive.max_weight);
            assert_eq!(opt.max_cardinality, naive.max_cardinality);
            assert_eq!(opt.weight_vector.as_slice(), &naive.best_vector[..]);
        }
    }
}

#[test]
fn edge_weight_oracle_agrees_with_full_enumeration() {
    let mut instances = 0;
    for seed in 3000..3100 {
        let mut rng = SplitMix64::new(seed);
        let n = 2 + rng.next_below(7) as usize;
        let g = random_graph(n, 0.5, &mut rng);
        let ew = random_edge_weights(&g, 0, 12, &mut rng);
        let instance = EdgeWeightedGraph::new(&g, ew).unwrap();
        let (matching, value) = oracle_mem(&instance).unwrap();
        assert!(verify_matching(&g, &matching), "seed {seed}");
        assert_eq!(instance.matching_weight(&matching), value, "seed {seed}");
        assert_eq!(value, naive_mem(&instance), "seed {seed}");
        instances += 1;
    }
    assert!(instances >= 100);
}
