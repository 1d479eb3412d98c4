//! Vertex-weighted matching algorithms.
//!
//! All three solvers process vertices in one pass by descending weight; they
//! differ in how far they look for an augmenting path from each vertex:
//!
//! * [`half_mvm`] — no augmentation at all: pair with the heaviest free
//!   neighbor.  1/2-approximate.
//! * [`two_thirds_mvm`] — augmenting paths of length at most three.
//!   2/3-approximate.
//! * [`exact_mvm`] — full alternating-tree search with blossom contraction,
//!   augmenting toward the heaviest reachable free vertex.  Exact.

mod exact;
mod half;
mod two_thirds;

pub use exact::{exact_mvm, exact_mvm_with_options, ExactOptions, SearchScratch};
pub use half::half_mvm;
pub use two_thirds::two_thirds_mvm;

#[cfg(debug_assertions)]
pub(crate) fn debug_check_path(graph: &crate::graph::Graph, path: &[crate::graph::Vertex]) {
    for pair in path.windows(2) {
        debug_assert!(
            graph.has_edge(pair[0], pair[1]),
            "augmenting path uses a non-edge {:?}",
            (pair[0], pair[1])
        );
    }
    let mut seen = std::collections::HashSet::with_capacity(path.len());
    for &v in path {
        debug_assert!(seen.insert(v), "augmenting path revisits vertex {v}");
    }
}
