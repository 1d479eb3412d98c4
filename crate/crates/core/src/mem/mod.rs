//! Edge-weighted matching: the vertex-to-edge weight reduction, a greedy
//! baseline, the path-growing GPA heuristic, and 2-augmentation local
//! search.
//!
//! The edge-weighted problem (maximize the total weight of matched *edges*)
//! subsumes the vertex-weighted one through [`mvm_to_mem`], which gives each
//! edge the weight of its two endpoints; on reduced instances the two
//! objectives coincide on every matching.

mod gpa;
mod improve;

pub use gpa::gpa_mem;
pub use improve::{
    apply_two_augmentation, best_two_augmentation, phase_budget, random_improve_mem,
    round_robin_improve_mem, Arm, ImproveError, TwoAugmentation, TwoAugmentationKind,
};

use std::cmp::Ordering;

use crate::graph::{Graph, Vertex};
use crate::matching::Matching;
use crate::weight::{VertexWeights, Weight};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EdgeWeightError {
    #[error("{weights} edge weights supplied for {edges} edges")]
    CountMismatch { weights: usize, edges: usize },
    #[error("edge {edge} has negative weight {weight}")]
    Negative { edge: u32, weight: String },
}

/// A graph together with one non-negative weight per edge, indexed by the
/// graph's stable edge ids.
pub struct EdgeWeightedGraph<'g, W> {
    graph: &'g Graph,
    weights: Vec<W>,
}

impl<'g, W: Weight> EdgeWeightedGraph<'g, W> {
    pub fn new(graph: &'g Graph, weights: Vec<W>) -> Result<Self, EdgeWeightError> {
        if weights.len() != graph.edge_count() {
            return Err(EdgeWeightError::CountMismatch {
                weights: weights.len(),
                edges: graph.edge_count(),
            });
        }
        if let Some((e, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| w.cmp_w(&W::zero()) == Ordering::Less)
        {
            return Err(EdgeWeightError::Negative {
                edge: e as u32,
                weight: w.to_string(),
            });
        }
        Ok(EdgeWeightedGraph { graph, weights })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn edge_weight(&self, edge: u32) -> W {
        self.weights[edge as usize]
    }

    pub fn edge_weights(&self) -> &[W] {
        &self.weights
    }

    /// Weight of the edge `{u, v}`, if present.
    pub fn weight_between(&self, u: Vertex, v: Vertex) -> Option<W> {
        self.graph.edge_between(u, v).map(|e| self.edge_weight(e))
    }

    /// Sum of matched-edge weights — the MEM objective.
    pub fn matching_weight(&self, matching: &Matching) -> W {
        matching
            .pairs()
            .map(|(u, v)| {
                self.weight_between(u, v)
                    .expect("matched pair must be a graph edge")
            })
            .sum()
    }
}

/// Reduces a vertex-weighted instance to an edge-weighted one by
/// `w({u,v}) = φ(u) + φ(v)`.
///
/// Any matching has the same objective value under both readings whenever it
/// has no exposed vertex of positive weight adjacent only to matched
/// vertices — in particular the optima coincide, which the oracle tests
/// confirm.
pub fn mvm_to_mem<'g, W: Weight>(
    graph: &'g Graph,
    weights: &VertexWeights<W>,
) -> EdgeWeightedGraph<'g, W> {
    assert_eq!(weights.len(), graph.vertex_count());
    let edge_weights = graph
        .edges()
        .iter()
        .map(|&(u, v)| weights.get(u) + weights.get(v))
        .collect();
    EdgeWeightedGraph {
        graph,
        weights: edge_weights,
    }
}

/// Edge indices by (weight descending, id ascending); id order is the
/// lexicographic `(lo, hi)` endpoint order, so ties resolve to the smallest
/// endpoint pair.
pub(crate) fn edges_by_weight<W: Weight>(instance: &EdgeWeightedGraph<'_, W>) -> Vec<u32> {
    let mut order: Vec<u32> = (0..instance.graph.edge_count() as u32).collect();
    order.sort_unstable_by(|&a, &b| {
        instance
            .edge_weight(b)
            .cmp_w(&instance.edge_weight(a))
            .then(a.cmp(&b))
    });
    order
}

/// Greedy edge-weighted matching: heaviest edge first, taken whenever both
/// endpoints are still free.  1/2-approximate.
pub fn greedy_mem<W: Weight>(instance: &EdgeWeightedGraph<'_, W>) -> Matching {
    let graph = instance.graph();
    let mut matching = Matching::new(graph.vertex_count());
    for e in edges_by_weight(instance) {
        let (u, v) = graph.endpoints(e);
        if !matching.is_matched(u) && !matching.is_matched(v) {
            matching.match_pair(u, v);
        }
    }
    matching
}
