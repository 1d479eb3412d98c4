//! Ground truth: matching validation, statistics, and brute-force oracles.
//!
//! The oracles enumerate matchings outright and are therefore restricted to
//! small instances, but they are independent of every algorithm in this
//! crate — the test suite pins the solvers against them.  Exactness holds
//! whenever weight additions are exact (integers, or dyadic rationals in
//! floating point); the benchmark harness invokes the oracles in integer
//! mode only.

use std::cmp::Ordering;

use crate::graph::{Graph, Vertex, UNMATCHED};
use crate::matching::Matching;
use crate::mem::EdgeWeightedGraph;
use crate::weight::{VertexWeights, Weight};

/// Largest vertex count the brute-force oracles accept by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance has {vertices} vertices, above the brute-force limit of {limit}")]
    InstanceTooLarge { vertices: usize, limit: usize },
}

/// Matched-vertex weights in non-increasing order.
///
/// Two matchings compare by this vector lexicographically, where a proper
/// prefix is smaller than any extension of it; the lexicographic maximum is
/// the canonical optimum of the vertex-weighted matching problem.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<W>(Vec<W>);

impl<W: Weight> WeightVector<W> {
    pub fn from_matching(matching: &Matching, weights: &VertexWeights<W>) -> Self {
        let mut v: Vec<W> = matching.matched_vertices().map(|x| weights.get(x)).collect();
        v.sort_unstable_by(|a, b| b.cmp_w(a));
        WeightVector(v)
    }

    pub fn as_slice(&self) -> &[W] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> W {
        self.0.iter().copied().sum()
    }

    /// Lexicographic comparison; a proper prefix is smaller.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        lex_cmp_desc(&self.0, &other.0)
    }
}

fn lex_cmp_desc<W: Weight>(a: &[W], b: &[W]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp_w(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Summary of one matching against an optional reference optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchStats<W> {
    pub weight: W,
    pub cardinality: usize,
    pub weight_vector: WeightVector<W>,
    pub gap_percent: Option<f64>,
}

/// Relative shortfall from the optimum, in percent: `100·(1 − w/opt)`.
///
/// A zero optimum yields a zero gap when the achieved weight is also zero
/// and no gap otherwise (the ratio is undefined).
pub fn gap_percent<W: Weight>(achieved: W, optimum: W) -> Option<f64> {
    if optimum.is_zero() {
        achieved.is_zero().then_some(0.0)
    } else {
        Some(100.0 * (1.0 - achieved.as_f64() / optimum.as_f64()))
    }
}

pub fn stats<W: Weight>(
    matching: &Matching,
    weights: &VertexWeights<W>,
    optimum: Option<W>,
) -> MatchStats<W> {
    let weight_vector = WeightVector::from_matching(matching, weights);
    let weight = weight_vector.sum();
    debug_assert_eq!(weight_vector.len(), 2 * matching.cardinality());
    MatchStats {
        weight,
        cardinality: matching.cardinality(),
        gap_percent: optimum.and_then(|opt| gap_percent(weight, opt)),
        weight_vector,
    }
}

/// True iff `matching` is a valid matching of `graph`: symmetric partner
/// entries, no self-pairs, and every pair an actual edge.
pub fn verify_matching(graph: &Graph, matching: &Matching) -> bool {
    if matching.vertex_count() != graph.vertex_count() {
        return false;
    }
    for v in graph.vertices() {
        if let Some(p) = matching.partner(v) {
            if (p as usize) >= graph.vertex_count()
                || p == v
                || matching.partner(p) != Some(v)
                || !graph.has_edge(v, p)
            {
                return false;
            }
        }
    }
    true
}

/// Everything the brute-force vertex-weighted oracle knows about an instance.
#[derive(Debug, Clone)]
pub struct MvmOptimum<W> {
    /// A matching attaining the lexicographically maximal weight vector.
    pub matching: Matching,
    pub weight_vector: WeightVector<W>,
    /// Maximum matched-vertex weight over all matchings.
    pub max_weight: W,
    /// Maximum cardinality over all matchings.
    pub max_cardinality: usize,
}

/// Brute-force vertex-weighted matching oracle with the default size limit.
pub fn oracle_mvm<W: Weight>(
    graph: &Graph,
    weights: &VertexWeights<W>,
) -> Result<MvmOptimum<W>, OracleError> {
    oracle_mvm_with_limit(graph, weights, DEFAULT_ORACLE_LIMIT)
}

/// Brute-force oracle: enumerates all matchings (branch and bound), tracking
/// the lex-max weight vector, the maximum weight, and the maximum
/// cardinality in one pass.
///
/// On return it asserts the classical coincidences — the lex-max matching
/// attains both the maximum weight and the maximum cardinality — which makes
/// every oracle call a self-check of the theory the fast algorithms rely on.
pub fn oracle_mvm_with_limit<W: Weight>(
    graph: &Graph,
    weights: &VertexWeights<W>,
    limit: usize,
) -> Result<MvmOptimum<W>, OracleError> {
    let n = graph.vertex_count();
    if n > limit {
        return Err(OracleError::InstanceTooLarge { vertices: n, limit });
    }
    assert_eq!(weights.len(), n);

    let mut search = MvmSearch {
        graph,
        weights,
        partner: vec![UNMATCHED; n],
        scratch_vector: Vec::with_capacity(n),
        best_vector: Vec::new(),
        best_partner: vec![UNMATCHED; n],
        best_weight: W::zero(),
        best_cardinality: 0,
    };
    let total = weights.total();
    search.explore(0, W::zero(), 0, total, n);

    let mut matching = Matching::new(n);
    let best_partner = search.best_partner;
    for v in 0..n as Vertex {
        let p = best_partner[v as usize];
        if p != UNMATCHED && v < p {
            matching.match_pair(v, p);
        }
    }
    let weight_vector = WeightVector(search.best_vector);

    // Lex-max implies max weight and max cardinality (for non-negative
    // weights); holding that here is a standing self-check of the oracle.
    assert_eq!(
        weight_vector.sum().cmp_w(&search.best_weight),
        Ordering::Equal,
        "lex-max matching must attain the maximum weight"
    );
    assert_eq!(
        matching.cardinality(),
        search.best_cardinality,
        "lex-max matching must attain the maximum cardinality"
    );

    Ok(MvmOptimum {
        matching,
        weight_vector,
        max_weight: search.best_weight,
        max_cardinality: search.best_cardinality,
    })
}

struct MvmSearch<'a, W> {
    graph: &'a Graph,
    weights: &'a VertexWeights<W>,
    partner: Vec<Vertex>,
    scratch_vector: Vec<W>,
    best_vector: Vec<W>,
    best_partner: Vec<Vertex>,
    best_weight: W,
    best_cardinality: usize,
}

impl<W: Weight> MvmSearch<'_, W> {
    /// Decide vertex `v`: leave it unmatched or pair it with a free
    /// neighbor of larger id.  `free_weight`/`free_count` cover the
    /// still-unmatched vertices with id ≥ `v` and bound what any
    /// completion of this branch can still gain.
    fn explore(&mut self, v: usize, weight: W, pairs: usize, free_weight: W, free_count: usize) {
        let n = self.graph.vertex_count();
        if (weight + free_weight).cmp_w(&self.best_weight) == Ordering::Less
            && pairs + free_count / 2 <= self.best_cardinality
        {
            return;
        }
        if v == n {
            self.record(weight, pairs);
            return;
        }
        let vv = v as Vertex;
        if self.partner[v] != UNMATCHED {
            self.explore(v + 1, weight, pairs, free_weight, free_count);
            return;
        }
        let wv = self.weights.get(vv);
        // pair v with each free later neighbor
        for i in 0..self.graph.degree(vv) {
            let u = self.graph.neighbor_edges(vv)[i].0;
            if u <= vv || self.partner[u as usize] != UNMATCHED {
                continue;
            }
            let wu = self.weights.get(u);
            self.partner[v] = u;
            self.partner[u as usize] = vv;
            self.explore(
                v + 1,
                weight + wv + wu,
                pairs + 1,
                free_weight - wv - wu,
                free_count - 2,
            );
            self.partner[v] = UNMATCHED;
            self.partner[u as usize] = UNMATCHED;
        }
        // leave v unmatched
        self.explore(v + 1, weight, pairs, free_weight - wv, free_count - 1);
    }

    fn record(&mut self, weight: W, pairs: usize) {
        if weight.cmp_w(&self.best_weight) == Ordering::Greater {
            self.best_weight = weight;
        }
        if pairs > self.best_cardinality {
            self.best_cardinality = pairs;
        }
        self.scratch_vector.clear();
        for (v, &p) in self.partner.iter().enumerate() {
            if p != UNMATCHED {
                self.scratch_vector.push(self.weights.get(v as Vertex));
            }
        }
        self.scratch_vector.sort_unstable_by(|a, b| b.cmp_w(a));
        if lex_cmp_desc(&self.scratch_vector, &self.best_vector) == Ordering::Greater {
            self.best_vector.clear();
            self.best_vector.extend_from_slice(&self.scratch_vector);
            self.best_partner.copy_from_slice(&self.partner);
        }
    }
}

/// Brute-force edge-weighted matching oracle with the default size limit.
pub fn oracle_mem<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
) -> Result<(Matching, W), OracleError> {
    oracle_mem_with_limit(instance, DEFAULT_ORACLE_LIMIT)
}

/// Maximum edge-weight matching by include/exclude search over edges.
pub fn oracle_mem_with_limit<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    limit: usize,
) -> Result<(Matching, W), OracleError> {
    let graph = instance.graph();
    let n = graph.vertex_count();
    if n > limit {
        return Err(OracleError::InstanceTooLarge { vertices: n, limit });
    }
    let m = graph.edge_count();
    // suffix[i] bounds what edges i.. can still contribute
    let mut suffix = vec![W::zero(); m + 1];
    for i in (0..m).rev() {
        let w = instance.edge_weight(i as u32);
        let gain = if w.cmp_w(&W::zero()) == Ordering::Greater {
            w
        } else {
            W::zero()
        };
        suffix[i] = suffix[i + 1] + gain;
    }

    let mut search = MemSearch {
        instance,
        suffix,
        partner: vec![UNMATCHED; n],
        best_partner: vec![UNMATCHED; n],
        best_weight: W::zero(),
    };
    search.explore(0, W::zero());

    let mut matching = Matching::new(n);
    for v in 0..n as Vertex {
        let p = search.best_partner[v as usize];
        if p != UNMATCHED && v < p {
            matching.match_pair(v, p);
        }
    }
    Ok((matching, search.best_weight))
}

struct MemSearch<'a, 'g, W> {
    instance: &'a EdgeWeightedGraph<'g, W>,
    suffix: Vec<W>,
    partner: Vec<Vertex>,
    best_partner: Vec<Vertex>,
    best_weight: W,
}

impl<W: Weight> MemSearch<'_, '_, W> {
    fn explore(&mut self, edge: usize, weight: W) {
        let graph = self.instance.graph();
        if (weight + self.suffix[edge]).cmp_w(&self.best_weight) == Ordering::Less {
            return;
        }
        if edge == graph.edge_count() {
            if weight.cmp_w(&self.best_weight) == Ordering::Greater {
                self.best_weight = weight;
                self.best_partner.copy_from_slice(&self.partner);
            }
            return;
        }
        let (u, v) = graph.endpoints(edge as u32);
        if self.partner[u as usize] == UNMATCHED && self.partner[v as usize] == UNMATCHED {
            self.partner[u as usize] = v;
            self.partner[v as usize] = u;
            self.explore(edge + 1, weight + self.instance.edge_weight(edge as u32));
            self.partner[u as usize] = UNMATCHED;
            self.partner[v as usize] = UNMATCHED;
        }
        self.explore(edge + 1, weight);
    }
}

/// True iff an augmenting path for `matching` exists anywhere in `graph`
/// — equivalently, iff the matching is not of maximum cardinality.
///
/// Independent single-purpose alternating-tree search with blossom
/// contraction (eager, array-per-root); kept deliberately separate from the
/// optimized exact solver so the two can cross-check each other.
pub fn has_augmenting_path(graph: &Graph, matching: &Matching) -> bool {
    assert_eq!(matching.vertex_count(), graph.vertex_count());
    graph
        .vertices()
        .any(|r| !matching.is_matched(r) && reaches_free_vertex(graph, matching, r))
}

fn reaches_free_vertex(graph: &Graph, matching: &Matching, root: Vertex) -> bool {
    let n = graph.vertex_count();
    let mut outer = vec![false; n];
    let mut parent: Vec<Vertex> = vec![UNMATCHED; n];
    let mut base: Vec<Vertex> = (0..n as Vertex).collect();
    let mut queue = std::collections::VecDeque::new();
    outer[root as usize] = true;
    queue.push_back(root);

    while let Some(x) = queue.pop_front() {
        for y in graph.neighbors(x) {
            if matching.partner(x) == Some(y) || base[x as usize] == base[y as usize] {
                continue;
            }
            if outer[y as usize] {
                contract_blossom(graph, matching, &mut parent, &mut base, &mut outer, &mut queue, x, y);
            } else if parent[y as usize] == UNMATCHED {
                parent[y as usize] = x;
                match matching.partner(y) {
                    // y is free and not the root (the root is outer): an
                    // augmenting path from root to y exists.
                    None => return true,
                    Some(z) => {
                        if !outer[z as usize] {
                            outer[z as usize] = true;
                            queue.push_back(z);
                        }
                    }
                }
            }
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn contract_blossom(
    graph: &Graph,
    matching: &Matching,
    parent: &mut [Vertex],
    base: &mut [Vertex],
    outer: &mut [bool],
    queue: &mut std::collections::VecDeque<Vertex>,
    x: Vertex,
    y: Vertex,
) {
    let n = graph.vertex_count();
    let cb = cycle_base(matching, parent, base, x, y);
    let mut in_blossom = vec![false; n];
    mark_cycle_half(matching, parent, base, &mut in_blossom, x, cb, y);
    mark_cycle_half(matching, parent, base, &mut in_blossom, y, cb, x);
    for v in 0..n {
        if in_blossom[base[v] as usize] {
            base[v] = cb;
            if !outer[v] {
                outer[v] = true;
                queue.push_back(v as Vertex);
            }
        }
    }
}

/// First common ancestor, by blossom base, of `a` and `b` in the
/// alternating tree.
fn cycle_base(
    matching: &Matching,
    parent: &[Vertex],
    base: &[Vertex],
    a: Vertex,
    b: Vertex,
) -> Vertex {
    let mut marked = vec![false; base.len()];
    let mut v = base[a as usize];
    loop {
        marked[v as usize] = true;
        match matching.partner(v) {
            None => break, // reached the root
            Some(z) => v = base[parent[z as usize] as usize],
        }
    }
    let mut u = base[b as usize];
    while !marked[u as usize] {
        let z = matching.partner(u).expect("non-root base has a partner");
        u = base[parent[z as usize] as usize];
    }
    u
}

/// Walks one side of the odd cycle from `v` down to the cycle base,
/// flagging traversed blossom bases and rethreading parent pointers so a
/// future augmenting walk can cross the contracted cycle.
fn mark_cycle_half(
    matching: &Matching,
    parent: &mut [Vertex],
    base: &[Vertex],
    in_blossom: &mut [bool],
    mut v: Vertex,
    cb: Vertex,
    mut child: Vertex,
) {
    while base[v as usize] != cb {
        let pv = matching.partner(v).expect("outer non-base cycle vertex is matched");
        in_blossom[base[v as usize] as usize] = true;
        in_blossom[base[pv as usize] as usize] = true;
        parent[v as usize] = child;
        child = pv;
        v = parent[pv as usize];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> (Graph, VertexWeights<i64>) {
        // center 0 (weight 1), leaves 1..3 with weights 9, 8, 7
        let g = Graph::from_edges(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = VertexWeights::new(vec![1, 9, 8, 7]).unwrap();
        (g, w)
    }

    #[test]
    fn oracle_on_star_picks_heaviest_leaf() {
        let (g, w) = star();
        let opt = oracle_mvm(&g, &w).unwrap();
        assert_eq!(opt.weight_vector.as_slice(), &[9, 1]);
        assert_eq!(opt.max_weight, 10);
        assert_eq!(opt.max_cardinality, 1);
        assert_eq!(opt.matching.partner(0), Some(1));
        assert!(verify_matching(&g, &opt.matching));
    }

    #[test]
    fn oracle_on_weighted_path() {
        // 0-1-2-3 with weights 10,1,1,9: both end edges beat the middle one
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = VertexWeights::new(vec![10, 1, 1, 9]).unwrap();
        let opt = oracle_mvm(&g, &w).unwrap();
        assert_eq!(opt.max_weight, 21);
        assert_eq!(opt.max_cardinality, 2);
        assert_eq!(opt.weight_vector.as_slice(), &[10, 9, 1, 1]);
    }

    #[test]
    fn oracle_prefers_cardinality_at_zero_weight() {
        let g = Graph::from_edges(2, vec![(0, 1)]).unwrap();
        let w = VertexWeights::new(vec![0i64, 0]).unwrap();
        let opt = oracle_mvm(&g, &w).unwrap();
        assert_eq!(opt.max_weight, 0);
        assert_eq!(opt.max_cardinality, 1);
        assert_eq!(opt.weight_vector.as_slice(), &[0, 0]);
    }

    #[test]
    fn oracle_handles_empty_and_edgeless_graphs() {
        let g = Graph::from_edges(0, std::iter::empty()).unwrap();
        let w = VertexWeights::new(Vec::<i64>::new()).unwrap();
        let opt = oracle_mvm(&g, &w).unwrap();
        assert!(opt.weight_vector.is_empty());
        assert_eq!(opt.max_cardinality, 0);

        let g = Graph::from_edges(3, std::iter::empty()).unwrap();
        let w = VertexWeights::new(vec![5i64, 6, 7]).unwrap();
        let opt = oracle_mvm(&g, &w).unwrap();
        assert_eq!(opt.max_weight, 0);
    }

    #[test]
    fn oracle_rejects_oversized_instances() {
        let g = Graph::from_edges(17, vec![(0, 1)]).unwrap();
        let w = VertexWeights::new(vec![1i64; 17]).unwrap();
        assert_eq!(
            oracle_mvm(&g, &w).unwrap_err(),
            OracleError::InstanceTooLarge {
                vertices: 17,
                limit: 16
            }
        );
        assert!(oracle_mvm_with_limit(&g, &w, 17).is_ok());
    }

    #[test]
    fn lex_order_treats_prefix_as_smaller() {
        let a = WeightVector(vec![5i64, 4]);
        let b = WeightVector(vec![5i64, 4, 0]);
        let c = WeightVector(vec![5i64, 3, 9]);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&c), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn gap_formula_and_corner_cases() {
        assert!((gap_percent(95i64, 100).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(gap_percent(100i64, 100), Some(0.0));
        assert_eq!(gap_percent(0i64, 0), Some(0.0));
        assert_eq!(gap_percent(1i64, 0), None);
        let near = gap_percent(2.0f64, 3.0).unwrap();
        assert!((near - 33.333333333333336).abs() < 1e-12);
    }

    #[test]
    fn stats_reports_vector_weight_and_gap() {
        let (g, w) = star();
        let mut m = Matching::new(g.vertex_count());
        m.match_pair(0, 2);
        let s = stats(&m, &w, Some(10));
        assert_eq!(s.weight, 9);
        assert_eq!(s.cardinality, 1);
        assert_eq!(s.weight_vector.as_slice(), &[8, 1]);
        assert!((s.gap_percent.unwrap() - 10.0).abs() < 1e-12);
        let s = stats(&m, &w, None);
        assert_eq!(s.gap_percent, None);
    }

    #[test]
    fn verify_matching_checks_edges_and_symmetry() {
        let (g, _) = star();
        let mut m = Matching::new(4);
        assert!(verify_matching(&g, &m));
        m.match_pair(0, 3);
        assert!(verify_matching(&g, &m));
        let mut bad = Matching::new(4);
        bad.match_pair(1, 2); // leaves are not adjacent
        assert!(!verify_matching(&g, &bad));
        let wrong_size = Matching::new(3);
        assert!(!verify_matching(&g, &wrong_size));
    }

    #[test]
    fn augmenting_path_detected_on_path_graph() {
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut m = Matching::new(4);
        m.match_pair(1, 2);
        assert!(has_augmenting_path(&g, &m)); // 0-1-2-3 augments
        let mut full = Matching::new(4);
        full.match_pair(0, 1);
        full.match_pair(2, 3);
        assert!(!has_augmenting_path(&g, &full));
    }

    #[test]
    fn no_augmenting_path_through_odd_cycle() {
        // 5-cycle with two matched edges is maximum
        let g = Graph::from_edges(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let mut m = Matching::new(5);
        m.match_pair(1, 2);
        m.match_pair(3, 4);
        assert!(!has_augmenting_path(&g, &m));
    }

    #[test]
    fn augmenting_path_found_across_blossom() {
        // 5-cycle plus pendant 5 on vertex 2; path 0-1-2-5 augments and is
        // only reachable after contracting the odd cycle.
        let g = Graph::from_edges(
            6,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (2, 5)],
        )
        .unwrap();
        let mut m = Matching::new(6);
        m.match_pair(1, 2);
        m.match_pair(3, 4);
        assert!(has_augmenting_path(&g, &m));
    }

    #[test]
    fn mem_oracle_on_weighted_path() {
        // path with edge weights 4, 6, 4: ends beat the middle
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let eg = EdgeWeightedGraph::new(&g, vec![4i64, 6, 4]).unwrap();
        let (m, w) = oracle_mem(&eg).unwrap();
        assert_eq!(w, 8);
        assert_eq!(m.cardinality(), 2);
        assert!(verify_matching(&g, &m));
    }

    #[test]
    fn mem_oracle_on_triangle() {
        let g = Graph::from_edges(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let eg = EdgeWeightedGraph::new(&g, vec![5i64, 4, 3]).unwrap();
        let (m, w) = oracle_mem(&eg).unwrap();
        assert_eq!(w, 5);
        assert_eq!(m.partner(0), Some(1));
    }
}
