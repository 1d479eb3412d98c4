//! Local search over 2-augmentations.
//!
//! A *2-augmentation* around a vertex `v` changes at most two matched edges
//! in the closed neighborhood of `v` and its partner.  Scanning vertices and
//! applying the best positive-gain 2-augmentation at each (randomly or in
//! round-robin phases) turns any matching into one whose edge weight
//! approaches 2/3 of the optimum.

use std::cmp::Ordering;

use crate::graph::Vertex;
use crate::matching::Matching;
use crate::rng::{fisher_yates, SplitMix64};
use crate::weight::Weight;

use super::EdgeWeightedGraph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ImproveError {
    #[error("epsilon must lie strictly between 0 and 2/3, got {0}")]
    InvalidEpsilon(f64),
}

/// One unmatched edge `{center, tip}` that a 2-augmentation may switch on,
/// displacing `tip`'s current partner if it has one.
///
/// The gain is `w(center,tip)` for a free tip, and
/// `w(center,tip) − w(tip,partner)` for a matched one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arm<W> {
    pub center: Vertex,
    pub tip: Vertex,
    pub displaced: Option<Vertex>,
    pub gain: W,
}

/// How a 2-augmentation rearranges the matching around its center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TwoAugmentationKind {
    /// Rotate a 4-cycle: drop `(v,v')` and `(a,b)`, add `(v,a)` and `(v',b)`.
    RotateCycle,
    /// Drop `(v,v')` and give each endpoint an independent arm.
    JoinPaths,
    /// Attach a free `v` by one arm.
    ApplyArm,
}

/// A concrete matching rearrangement with strictly positive gain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoAugmentation<W> {
    pub kind: TwoAugmentationKind,
    /// Matched pairs to dissolve, each `(lo, hi)`.
    pub remove: Vec<(Vertex, Vertex)>,
    /// Pairs to create, each `(lo, hi)`.
    pub add: Vec<(Vertex, Vertex)>,
    pub gain: W,
}

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// All positive-gain arms of `center`, sorted by (gain descending, tip
/// ascending).
fn positive_arms<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    matching: &Matching,
    center: Vertex,
) -> Vec<Arm<W>> {
    let partner = matching.partner(center);
    let mut arms: Vec<Arm<W>> = Vec::new();
    for &(tip, edge) in instance.graph().neighbor_edges(center) {
        if Some(tip) == partner {
            continue;
        }
        let base = instance.edge_weight(edge);
        let (displaced, gain) = match matching.partner(tip) {
            None => (None, base),
            Some(p) => (
                Some(p),
                base - instance
                    .weight_between(tip, p)
                    .expect("matched pair must be a graph edge"),
            ),
        };
        if gain.cmp_w(&W::zero()) == Ordering::Greater {
            arms.push(Arm {
                center,
                tip,
                displaced,
                gain,
            });
        }
    }
    arms.sort_by(|a, b| b.gain.cmp_w(&a.gain).then(a.tip.cmp(&b.tip)));
    arms
}

fn arms_disjoint<W>(a: &Arm<W>, b: &Arm<W>) -> bool {
    let hits = |x: Vertex| x == b.tip || Some(x) == b.displaced;
    !(hits(a.tip) || a.displaced.map_or(false, hits))
}

fn arm_into_edits<W: Weight>(
    arm: &Arm<W>,
    matching: &Matching,
    remove: &mut Vec<(Vertex, Vertex)>,
    add: &mut Vec<(Vertex, Vertex)>,
) {
    if let Some(d) = arm.displaced {
        debug_assert_eq!(matching.partner(arm.tip), Some(d));
        remove.push(ordered(arm.tip, d));
    }
    add.push(ordered(arm.center, arm.tip));
}

/// The best (highest-gain) 2-augmentation around `v`, if any has strictly
/// positive gain.
///
/// For a free `v` the candidates are its arms.  For a matched `v` with
/// partner `v'` they are 4-cycle rotations through `v'` and all ways of
/// dropping `(v,v')` while applying vertex-disjoint arms (either possibly
/// empty) at `v` and `v'`.  The best arm pair is found exactly: a fixed arm
/// of `v'` overlaps at most four arms of `v`, so scanning the five best arms
/// of `v` against every arm of `v'` covers the optimum without a quadratic
/// sweep over both sides.
///
/// Gain ties break by kind (rotate < join < arm), then by the edit lists.
pub fn best_two_augmentation<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    matching: &Matching,
    v: Vertex,
) -> Option<TwoAugmentation<W>> {
    let mut best: Option<TwoAugmentation<W>> = None;

    let mut offer = |cand: TwoAugmentation<W>| {
        let better = match &best {
            None => true,
            Some(b) => match cand.gain.cmp_w(&b.gain) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => (cand.kind, &cand.remove, &cand.add) < (b.kind, &b.remove, &b.add),
            },
        };
        if better {
            best = Some(cand);
        }
    };

    match matching.partner(v) {
        None => {
            for arm in positive_arms(instance, matching, v) {
                let mut remove = Vec::new();
                let mut add = Vec::new();
                arm_into_edits(&arm, matching, &mut remove, &mut add);
                offer(TwoAugmentation {
                    kind: TwoAugmentationKind::ApplyArm,
                    remove,
                    add,
                    gain: arm.gain,
                });
            }
        }
        Some(v2) => {
            let w_vv2 = instance
                .weight_between(v, v2)
                .expect("matched pair must be a graph edge");

            // 4-cycle rotations
            for &(a, edge_va) in instance.graph().neighbor_edges(v) {
                if a == v2 {
                    continue;
                }
                let Some(b) = matching.partner(a) else { continue };
                let Some(w_v2b) = instance.weight_between(v2, b) else { continue };
                let w_ab = instance
                    .weight_between(a, b)
                    .expect("matched pair must be a graph edge");
                let gain = instance.edge_weight(edge_va) + w_v2b - w_vv2 - w_ab;
                if gain.cmp_w(&W::zero()) == Ordering::Greater {
                    offer(TwoAugmentation {
                        kind: TwoAugmentationKind::RotateCycle,
                        remove: vec![ordered(v, v2), ordered(a, b)],
                        add: vec![ordered(v, a), ordered(v2, b)],
                        gain,
                    });
                }
            }

            // drop (v,v2), apply disjoint arms on both sides
            let arms_v = positive_arms(instance, matching, v);
            let arms_v2 = positive_arms(instance, matching, v2);
            let top_v = &arms_v[..arms_v.len().min(5)];
            let mut join = |a: Option<&Arm<W>>, b: Option<&Arm<W>>| {
                let gain = a.map_or(W::zero(), |x| x.gain) + b.map_or(W::zero(), |x| x.gain)
                    - w_vv2;
                if gain.cmp_w(&W::zero()) != Ordering::Greater {
                    return;
                }
                let mut remove = vec![ordered(v, v2)];
                let mut add = Vec::new();
                if let Some(x) = a {
                    arm_into_edits(x, matching, &mut remove, &mut add);
                }
                if let Some(x) = b {
                    arm_into_edits(x, matching, &mut remove, &mut add);
                }
                offer(TwoAugmentation {
                    kind: TwoAugmentationKind::JoinPaths,
                    remove,
                    add,
                    gain,
                });
            };
            for a in top_v {
                join(Some(a), None);
            }
            for b in &arms_v2 {
                join(None, Some(b));
                for a in top_v {
                    if arms_disjoint(a, b) {
                        join(Some(a), Some(b));
                    }
                }
            }
        }
    }
    best
}

/// Applies a 2-augmentation produced by [`best_two_augmentation`] on the
/// same matching state.
pub fn apply_two_augmentation<W: Weight>(matching: &mut Matching, aug: &TwoAugmentation<W>) {
    for &(a, b) in &aug.remove {
        matching.unmatch_pair(a, b);
    }
    for &(a, b) in &aug.add {
        matching.match_pair(a, b);
    }
}

/// Number of improvement phases needed for an expected `2/3 − ε` guarantee:
/// `⌈(1/3)·ln(1/ε)⌉`.  `ε` must lie strictly between 0 and 2/3.
pub fn phase_budget(epsilon: f64) -> Result<u32, ImproveError> {
    if !(epsilon > 0.0 && epsilon < 2.0 / 3.0) {
        return Err(ImproveError::InvalidEpsilon(epsilon));
    }
    Ok(((1.0 / 3.0) * (1.0 / epsilon).ln()).ceil().max(1.0) as u32)
}

/// Random local search: `n` vertex picks per phase, `phase_budget(ε)`
/// phases, each pick applying the best 2-augmentation at a uniformly random
/// vertex.  Starts from `initial` (cloned) and never decreases the weight.
pub fn random_improve_mem<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    initial: &Matching,
    epsilon: f64,
    seed: u64,
) -> Result<Matching, ImproveError> {
    let phases = phase_budget(epsilon)?;
    let mut matching = initial.clone();
    let n = instance.graph().vertex_count() as u64;
    if n == 0 {
        return Ok(matching);
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..phases.saturating_mul(n as u32) {
        let v = rng.next_below(n) as Vertex;
        if let Some(aug) = best_two_augmentation(instance, &matching, v) {
            apply_two_augmentation(&mut matching, &aug);
        }
    }
    Ok(matching)
}

/// Round-robin local search: `phase_budget(ε)` phases, each a full sweep
/// over a fresh random permutation of the vertices, applying the best
/// 2-augmentation at every stop.  Quits early after an improvement-free
/// phase.
pub fn round_robin_improve_mem<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    initial: &Matching,
    epsilon: f64,
    seed: u64,
) -> Result<Matching, ImproveError> {
    let phases = phase_budget(epsilon)?;
    let mut matching = initial.clone();
    let mut rng = SplitMix64::new(seed);
    let mut perm: Vec<Vertex> = instance.graph().vertices().collect();
    for _ in 0..phases {
        fisher_yates(&mut perm, &mut rng);
        let mut improved = false;
        for &v in &perm {
            if let Some(aug) = best_two_augmentation(instance, &matching, v) {
                apply_two_augmentation(&mut matching, &aug);
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Ok(matching)
}
