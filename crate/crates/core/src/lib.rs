//! Maximum vertex-weighted matching (MVM) on general graphs.
//!
//! In the MVM problem every vertex carries a non-negative weight and the goal
//! is a matching maximizing the total weight of *matched vertices*.  This
//! crate provides an exact solver (alternating-tree search with blossom
//! contraction), a 2/3-approximation based on augmenting paths of length at
//! most three, a 1/2-approximation that greedily pairs each vertex with its
//! heaviest free neighbor, plus the edge-weighted machinery needed to compare
//! against classic maximum edge-weight matching (MEM) heuristics: the
//! vertex-to-edge-weight reduction, greedy, GPA, and local-search improvers
//! built on 2-augmentations.
//!
//! Small-instance brute-force oracles and matching verifiers live in
//! [`verify`]; they are the ground truth the test suite pins every algorithm
//! against.
//!
//! Weights are generic over [`Weight`], which any ordered signed numeric type
//! satisfies.  [`IntWeight`] and [`RealWeight`] are the two concrete scalars
//! used by the command-line harness.

pub mod graph;
pub mod matching;
pub mod mem;
pub mod mvm;
pub mod rng;
pub mod sorted;
pub mod verify;
pub mod weight;

pub use graph::{Graph, GraphError, Vertex, UNMATCHED};
pub use matching::Matching;
pub use sorted::{HunCursors, SortedGraph, SortedGraphError};
pub use weight::{VertexWeights, Weight, WeightError};

/// Concrete scalar for whole-number weights.
pub type IntWeight = i64;

/// Concrete scalar for real-valued weights.
pub type RealWeight = f64;
