//! Matching state: partner array plus pair count.

use crate::graph::{Vertex, UNMATCHED};
use crate::weight::{VertexWeights, Weight};

/// A matching over vertices `0..n`, stored as a symmetric partner array.
///
/// The structure itself does not know the graph; algorithms are responsible
/// for only pairing adjacent vertices (and debug-assert exactly that after
/// each mutation).  Cardinality is the number of matched *pairs*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    partner: Vec<Vertex>,
    pairs: usize,
}

impl Matching {
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count < UNMATCHED as usize);
        Matching {
            partner: vec![UNMATCHED; vertex_count],
            pairs: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    /// Number of matched pairs.
    pub fn cardinality(&self) -> usize {
        self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs == 0
    }

    #[inline]
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        let p = self.partner[v as usize];
        (p != UNMATCHED).then_some(p)
    }

    #[inline]
    pub fn is_matched(&self, v: Vertex) -> bool {
        self.partner[v as usize] != UNMATCHED
    }

    /// Pairs two currently unmatched vertices.
    pub fn match_pair(&mut self, u: Vertex, v: Vertex) {
        debug_assert_ne!(u, v);
        debug_assert!(!self.is_matched(u) && !self.is_matched(v));
        self.partner[u as usize] = v;
        self.partner[v as usize] = u;
        self.pairs += 1;
    }

    /// Separates a currently matched pair.
    pub fn unmatch_pair(&mut self, u: Vertex, v: Vertex) {
        debug_assert_eq!(self.partner(u), Some(v));
        debug_assert_eq!(self.partner(v), Some(u));
        self.partner[u as usize] = UNMATCHED;
        self.partner[v as usize] = UNMATCHED;
        self.pairs -= 1;
    }

    /// Flips an alternating path with unmatched endpoints.
    ///
    /// `path` lists the vertices in order; edges at even positions become
    /// matched, edges at odd positions (previously matched pairs) become
    /// unmatched.  Net effect: cardinality grows by one.
    pub fn augment(&mut self, path: &[Vertex]) {
        debug_assert!(path.len() >= 2 && path.len() % 2 == 0);
        debug_assert!(!self.is_matched(path[0]) && !self.is_matched(path[path.len() - 1]));
        #[cfg(debug_assertions)]
        for pair in path[1..path.len() - 1].chunks_exact(2) {
            debug_assert_eq!(self.partner(pair[0]), Some(pair[1]));
        }
        for pair in path.chunks_exact(2) {
            self.partner[pair[0] as usize] = pair[1];
            self.partner[pair[1] as usize] = pair[0];
        }
        self.pairs += 1;
    }

    /// Matched vertices in ascending id order.
    pub fn matched_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p != UNMATCHED)
            .map(|(v, _)| v as Vertex)
    }

    /// Matched pairs as `(lo, hi)`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(v, &p)| p != UNMATCHED && (v as Vertex) < p)
            .map(|(v, &p)| (v as Vertex, p))
    }

    /// Sum of matched-vertex weights — the MVM objective.
    pub fn vertex_weight<W: Weight>(&self, weights: &VertexWeights<W>) -> W {
        self.matched_vertices().map(|v| weights.get(v)).sum()
    }
}
