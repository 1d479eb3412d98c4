//! Weight scalar abstraction and per-vertex weight storage.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Signed, ToPrimitive};

use crate::graph::Vertex;

/// Scalar type usable as a vertex or edge weight.
///
/// Implemented for any ordered signed numeric type; in practice `i64` and
/// `f64` (see the crate-level aliases).  Signedness is required because the
/// local-search improvers compute gains, which can be negative even though
/// the weights themselves never are.
///
/// Weights flowing through this crate are never NaN: input weights are
/// validated non-negative and every derived quantity is a finite sum or
/// difference of inputs.  `cmp_w` relies on that to provide a total order.
pub trait Weight:
    Copy + PartialOrd + Debug + Display + Signed + Sum<Self> + ToPrimitive + Send + Sync + 'static
{
    /// Total-order comparison. Panics on NaN, which no valid weight is.
    fn cmp_w(&self, other: &Self) -> Ordering {
        self.partial_cmp(other)
            .expect("weights are ordered (NaN is not a valid weight)")
    }

    /// Lossy conversion for reporting (gaps, geometric means).
    fn as_f64(&self) -> f64 {
        self.to_f64().expect("weight representable as f64")
    }
}

impl<T> Weight for T where
    T: Copy + PartialOrd + Debug + Display + Signed + Sum<T> + ToPrimitive + Send + Sync + 'static
{
}

/// Errors from constructing a weight assignment.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeightError {
    #[error("vertex {vertex} has negative weight {weight}")]
    Negative { vertex: usize, weight: String },
}

/// Non-negative weights indexed by vertex id.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights<W> {
    values: Vec<W>,
}

impl<W: Weight> VertexWeights<W> {
    /// Wraps one weight per vertex, id order. Rejects negative entries.
    pub fn new(values: Vec<W>) -> Result<Self, WeightError> {
        if let Some((i, w)) = values
            .iter()
            .enumerate()
            .find(|(_, w)| w.cmp_w(&W::zero()) == Ordering::Less)
        {
            return Err(WeightError::Negative {
                vertex: i,
                weight: w.to_string(),
            });
        }
        Ok(VertexWeights { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> W {
        self.values[v as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = W> + '_ {
        self.values.iter().copied()
    }

    pub fn as_slice(&self) -> &[W] {
        &self.values
    }

    /// Sum over all vertices (matched or not).
    pub fn total(&self) -> W {
        self.values.iter().copied().sum()
    }
}
