//! Weight-sorted graph view and heaviest-free-neighbor lookups.
//!
//! The approximation algorithms repeatedly ask "which is the heaviest
//! currently-unmatched neighbor of v?".  Answering by rescanning the
//! adjacency list makes that O(deg) per query; this module instead sorts each
//! adjacency list once by descending weight and keeps a per-vertex cursor
//! that only ever moves forward, past neighbors that are matched (matched
//! vertices stay matched in those algorithms, so skipped prefixes never need
//! revisiting).  Total lookup cost across a run is then linear in the
//! adjacency size.

use std::cmp::Ordering;

use crate::graph::{Graph, Vertex};
use crate::matching::Matching;
use crate::weight::{VertexWeights, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SortedGraphError {
    #[error("weight assignment covers {weights} vertices but the graph has {vertices}")]
    DimensionMismatch { weights: usize, vertices: usize },
}

/// Graph plus weights, with adjacency lists and the vertex set ordered by
/// (weight descending, id ascending).
///
/// Borrowed and immutable; per-run mutable cursor state lives in
/// [`HunCursors`] so concurrent runs over one `SortedGraph` stay independent.
#[derive(Debug)]
pub struct SortedGraph<'a, W> {
    graph: &'a Graph,
    weights: &'a VertexWeights<W>,
    sorted_adj: Vec<Vertex>,
    order: Vec<Vertex>,
}

/// Per-vertex forward cursors into the sorted adjacency lists.
#[derive(Debug, Clone)]
pub struct HunCursors {
    pos: Vec<u32>,
}

impl<'a, W: Weight> SortedGraph<'a, W> {
    pub fn build(
        graph: &'a Graph,
        weights: &'a VertexWeights<W>,
    ) -> Result<Self, SortedGraphError> {
        if weights.len() != graph.vertex_count() {
            return Err(SortedGraphError::DimensionMismatch {
                weights: weights.len(),
                vertices: graph.vertex_count(),
            });
        }
        let by_weight = |a: &Vertex, b: &Vertex| -> Ordering {
            weights.get(*b).cmp_w(&weights.get(*a)).then(a.cmp(b))
        };

        let offsets = graph.adjacency_offsets();
        let mut sorted_adj: Vec<Vertex> = Vec::with_capacity(2 * graph.edge_count());
        for v in graph.vertices() {
            sorted_adj.extend(graph.neighbors(v));
            let start = offsets[v as usize];
            sorted_adj[start..].sort_unstable_by(by_weight);
        }

        let mut order: Vec<Vertex> = graph.vertices().collect();
        order.sort_unstable_by(by_weight);

        Ok(SortedGraph {
            graph,
            weights,
            sorted_adj,
            order,
        })
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn weights(&self) -> &'a VertexWeights<W> {
        self.weights
    }

    #[inline]
    pub fn weight(&self, v: Vertex) -> W {
        self.weights.get(v)
    }

    /// Neighbors of `v` by (weight descending, id ascending).
    #[inline]
    pub fn sorted_neighbors(&self, v: Vertex) -> &[Vertex] {
        let offsets = self.graph.adjacency_offsets();
        &self.sorted_adj[offsets[v as usize]..offsets[v as usize + 1]]
    }

    /// All vertices by (weight descending, id ascending) — the processing
    /// order of the matching algorithms.
    pub fn vertex_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Fresh cursors, one per vertex, all at the heaviest neighbor.
    pub fn new_cursors(&self) -> HunCursors {
        HunCursors {
            pos: vec![0; self.graph.vertex_count()],
        }
    }

    /// Heaviest unmatched neighbor of `v`, ignoring `exclude`, maintaining
    /// the forward cursor.
    ///
    /// The cursor advances past matched neighbors — they can never be
    /// answers again.  It must *not* advance past an unmatched `exclude`
    /// vertex: a later query with a different exclusion may still need it.
    pub fn heaviest_unmatched_neighbor(
        &self,
        cursors: &mut HunCursors,
        v: Vertex,
        matching: &Matching,
        exclude: Option<Vertex>,
    ) -> Option<Vertex> {
        let list = self.sorted_neighbors(v);
        let mut pos = cursors.pos[v as usize] as usize;
        let mut advancing = true;
        while pos < list.len() {
            let candidate = list[pos];
            if matching.is_matched(candidate) {
                pos += 1;
                if advancing {
                    cursors.pos[v as usize] = pos as u32;
                }
                continue;
            }
            if Some(candidate) == exclude {
                advancing = false;
                pos += 1;
                continue;
            }
            return Some(candidate);
        }
        None
    }

    /// Cursor-free variant: rescans from the top every call.
    ///
    /// Used where matched vertices can become unmatched again (local-search
    /// improvers), which breaks the forward-cursor assumption.
    pub fn heaviest_unmatched_neighbor_scan(
        &self,
        v: Vertex,
        matching: &Matching,
        exclude: Option<Vertex>,
    ) -> Option<Vertex> {
        self.sorted_neighbors(v)
            .iter()
            .copied()
            .find(|&c| !matching.is_matched(c) && Some(c) != exclude)
    }
}

impl HunCursors {
    /// Current cursor offset for `v` (for tests and diagnostics).
    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v as usize] as usize
    }
}
