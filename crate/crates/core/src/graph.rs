//! Undirected simple graph in compressed adjacency form.

/// Vertex id. Dense, zero-based.
pub type Vertex = u32;

/// Sentinel partner value meaning "not matched".
pub const UNMATCHED: Vertex = Vertex::MAX;

/// Errors from graph construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        endpoint: usize,
        vertex_count: usize,
    },
    #[error("vertex count {0} exceeds the supported maximum")]
    TooManyVertices(usize),
    #[error("edge count {0} exceeds the supported maximum")]
    TooManyEdges(usize),
}

/// Undirected simple graph.
///
/// Construction normalizes the input: self-loops and duplicate edges are
/// dropped (their counts are kept for reporting).  Edges are stored once as
/// `(lo, hi)` pairs sorted lexicographically; the position of an edge in that
/// order is its stable edge id, which edge-weighted algorithms use to attach
/// weights.  Per-vertex adjacency lists are sorted by neighbor id, so edge
/// membership tests are binary searches.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    offsets: Vec<usize>,
    adj: Vec<(Vertex, u32)>, // (neighbor, edge id), neighbor ascending
    dropped_self_loops: usize,
    dropped_duplicates: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from endpoint pairs.
    pub fn from_edges<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        // Vertex::MAX is reserved as the unmatched sentinel.
        if vertex_count >= Vertex::MAX as usize {
            return Err(GraphError::TooManyVertices(vertex_count));
        }

        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut dropped_self_loops = 0usize;
        for (a, b) in pairs {
            if a >= vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    endpoint: a,
                    vertex_count,
                });
            }
            if b >= vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    endpoint: b,
                    vertex_count,
                });
            }
            if a == b {
                dropped_self_loops += 1;
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            edges.push((lo as Vertex, hi as Vertex));
        }

        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        let dropped_duplicates = before - edges.len();
        if edges.len() > u32::MAX as usize {
            return Err(GraphError::TooManyEdges(edges.len()));
        }

        let mut offsets = vec![0usize; vertex_count + 1];
        for &(u, v) in &edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut adj = vec![(0 as Vertex, 0u32); 2 * edges.len()];
        // Filling in lexicographic edge order leaves every adjacency slice
        // sorted by neighbor id: a vertex first receives its smaller
        // neighbors (ascending) and then its larger ones (ascending).
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[cursor[u as usize]] = (v, id as u32);
            cursor[u as usize] += 1;
            adj[cursor[v as usize]] = (u, id as u32);
            cursor[v as usize] += 1;
        }

        Ok(Graph {
            vertex_count,
            edges,
            offsets,
            adj,
            dropped_self_loops,
            dropped_duplicates,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs; the slice index is the edge id.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: u32) -> (Vertex, Vertex) {
        self.edges[edge as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.vertex_count as Vertex
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.offsets[v + 1] - self.offsets[v])
            .max()
            .unwrap_or(0)
    }

    /// Neighbors of `v` with their edge ids, neighbor id ascending.
    #[inline]
    pub fn neighbor_edges(&self, v: Vertex) -> &[(Vertex, u32)] {
        &self.adj[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.neighbor_edges(v).iter().map(|&(u, _)| u)
    }

    /// Id of the edge `{u, v}`, if present.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let slice = self.neighbor_edges(u);
        slice
            .binary_search_by_key(&v, |&(nbr, _)| nbr)
            .ok()
            .map(|i| slice[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Self-loops discarded during construction.
    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    /// Parallel edges discarded during construction.
    pub fn dropped_duplicates(&self) -> usize {
        self.dropped_duplicates
    }

    /// Offsets into the adjacency array, shared by the weight-sorted view.
    pub(crate) fn adjacency_offsets(&self) -> &[usize] {
        &self.offsets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_duplicates_and_loops() {
        // (2,1) mirrors (1,2); (3,3) is a loop.
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 1), (3, 3), (0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.dropped_self_loops(), 1);
        assert_eq!(g.dropped_duplicates(), 2);
    }

    #[test]
    fn adjacency_is_sorted_and_searchable() {
        let g = Graph::from_edges(5, vec![(4, 2), (0, 2), (2, 3), (1, 2)]).unwrap();
        let nbrs: Vec<Vertex> = g.neighbors(2).collect();
        assert_eq!(nbrs, vec![0, 1, 3, 4]);
        assert_eq!(g.degree(2), 4);
        assert_eq!(g.degree(0), 1);
        assert!(g.has_edge(2, 4));
        assert!(g.has_edge(4, 2));
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.edge_between(2, 3), g.edge_between(3, 2));
    }

    #[test]
    fn edge_ids_follow_lexicographic_order() {
        let g = Graph::from_edges(4, vec![(2, 3), (0, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_between(0, 1), Some(0));
        assert_eq!(g.edge_between(3, 0), Some(1));
        assert_eq!(g.endpoints(2), (2, 3));
    }

    #[test]
    fn rejects_out_of_range_endpoints() {
        let err = Graph::from_edges(3, vec![(0, 3)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::EndpointOutOfRange {
                endpoint: 3,
                vertex_count: 3
            }
        );
    }

    #[test]
    fn rejects_vertex_count_at_sentinel() {
        let err = Graph::from_edges(u32::MAX as usize, std::iter::empty()).unwrap_err();
        assert_eq!(err, GraphError::TooManyVertices(u32::MAX as usize));
    }

    #[test]
    fn empty_and_isolated_vertices() {
        let g = Graph::from_edges(3, std::iter::empty()).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.degree(1), 0);
        assert_eq!(g.max_degree(), 0);
        assert_eq!(g.neighbors(0).count(), 0);
    }
}
