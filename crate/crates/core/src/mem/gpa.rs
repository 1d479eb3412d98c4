//! GPA: the path-growing edge-weighted matching heuristic.

use std::cmp::Ordering;

use crate::graph::Vertex;
use crate::matching::Matching;
use crate::weight::Weight;

use super::{edges_by_weight, EdgeWeightedGraph};

/// Path-growing matching heuristic.
///
/// Each round scans the still-usable edges by descending weight and collects
/// them into a *structure*: a vertex-disjoint union of paths and even
/// cycles.  An edge is taken if both endpoints have structure-degree below
/// two and it does not close an odd cycle.  Every path and cycle is then
/// solved exactly by a small take/skip dynamic program and the winners enter
/// the matching; a new round runs on the edges whose endpoints are still
/// free, until a round adds nothing.
pub fn gpa_mem<W: Weight>(instance: &EdgeWeightedGraph<'_, W>) -> Matching {
    let graph = instance.graph();
    let n = graph.vertex_count();
    let mut matching = Matching::new(n);
    let mut eligible = edges_by_weight(instance);

    loop {
        eligible.retain(|&e| {
            let (u, v) = graph.endpoints(e);
            !matching.is_matched(u) && !matching.is_matched(v)
        });
        if eligible.is_empty() {
            break;
        }
        let structure = build_structure(instance, &eligible, n);
        let before = matching.cardinality();
        select_from_structure(instance, &structure, &mut matching);
        if matching.cardinality() == before {
            break; // cannot happen for non-negative weights; terminates regardless
        }
    }
    matching
}

/// Vertex-disjoint paths and even cycles, as up to two incident edges per
/// vertex.
struct Structure {
    slots: Vec<[(Vertex, u32); 2]>,
    degree: Vec<u8>,
}

fn build_structure<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    eligible: &[u32],
    n: usize,
) -> Structure {
    let graph = instance.graph();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut size: Vec<u32> = vec![1; n];
    let mut slots = vec![[(0 as Vertex, 0u32); 2]; n];
    let mut degree = vec![0u8; n];

    fn find(parent: &mut [u32], mut v: u32) -> u32 {
        while parent[v as usize] != v {
            parent[v as usize] = parent[parent[v as usize] as usize];
            v = parent[v as usize];
        }
        v
    }

    for &e in eligible {
        let (u, v) = graph.endpoints(e);
        if degree[u as usize] == 2 || degree[v as usize] == 2 {
            continue;
        }
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru == rv {
            // both ends of one structure path: closing it makes a cycle of
            // `size` edges — only even cycles are allowed
            if size[ru as usize] % 2 != 0 {
                continue;
            }
        } else {
            let (big, small) = if size[ru as usize] >= size[rv as usize] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            parent[small as usize] = big;
            size[big as usize] += size[small as usize];
        }
        slots[u as usize][degree[u as usize] as usize] = (v, e);
        degree[u as usize] += 1;
        slots[v as usize][degree[v as usize] as usize] = (u, e);
        degree[v as usize] += 1;
    }

    Structure { slots, degree }
}

fn select_from_structure<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    structure: &Structure,
    matching: &mut Matching,
) {
    let n = structure.degree.len();
    let mut visited = vec![false; n];
    let mut edges: Vec<u32> = Vec::new();

    // paths start at degree-1 vertices
    for v in 0..n as Vertex {
        if structure.degree[v as usize] == 1 && !visited[v as usize] {
            walk(structure, &mut visited, v, &mut edges, false);
            let selected = path_best(instance, &edges);
            commit(instance, &edges, &selected, matching);
        }
    }
    // whatever has degree 2 and was never visited lies on a cycle
    for v in 0..n as Vertex {
        if structure.degree[v as usize] == 2 && !visited[v as usize] {
            walk(structure, &mut visited, v, &mut edges, true);
            let selected = cycle_best(instance, &edges);
            commit(instance, &edges, &selected, matching);
        }
    }
}

/// Collects the edge sequence of the path (or cycle) through `start` into
/// `edges`, marking vertices visited.
fn walk(
    structure: &Structure,
    visited: &mut [bool],
    start: Vertex,
    edges: &mut Vec<u32>,
    cyclic: bool,
) {
    edges.clear();
    let mut cur = start;
    let mut prev_edge = u32::MAX;
    loop {
        visited[cur as usize] = true;
        let deg = structure.degree[cur as usize] as usize;
        let next = structure.slots[cur as usize][..deg]
            .iter()
            .find(|&&(_, e)| e != prev_edge)
            .copied();
        match next {
            None => break,
            Some((nbr, e)) => {
                edges.push(e);
                prev_edge = e;
                cur = nbr;
                if cyclic && cur == start {
                    break;
                }
            }
        }
    }
}

/// Take/skip dynamic program over a path's edge sequence; returns the
/// selected-edge flags.  Ties prefer taking the edge, so zero-weight paths
/// still produce a maximal selection.
fn path_best<W: Weight>(instance: &EdgeWeightedGraph<'_, W>, edges: &[u32]) -> Vec<bool> {
    let k = edges.len();
    let mut value = vec![W::zero(); k + 1];
    let mut take = vec![false; k];
    for i in 1..=k {
        let w = instance.edge_weight(edges[i - 1]);
        let with = if i >= 2 { value[i - 2] + w } else { w };
        let without = value[i - 1];
        if with.cmp_w(&without) != Ordering::Less {
            value[i] = with;
            take[i - 1] = true;
        } else {
            value[i] = without;
        }
    }
    let mut selected = vec![false; k];
    let mut i = k;
    while i > 0 {
        if take[i - 1] {
            selected[i - 1] = true;
            i = i.saturating_sub(2);
        } else {
            i -= 1;
        }
    }
    selected
}

/// Best matching on an even cycle: the better of the two path programs that
/// drop the first edge or the closing edge.
fn cycle_best<W: Weight>(instance: &EdgeWeightedGraph<'_, W>, edges: &[u32]) -> Vec<bool> {
    let k = edges.len();
    debug_assert!(k >= 4 && k % 2 == 0);
    let skip_first = path_best(instance, &edges[1..]);
    let skip_last = path_best(instance, &edges[..k - 1]);
    let total = |sel: &[bool], offset: usize| -> W {
        sel.iter()
            .enumerate()
            .filter(|&(_, &s)| s)
            .map(|(i, _)| instance.edge_weight(edges[i + offset]))
            .sum()
    };
    let mut selected = vec![false; k];
    if total(&skip_first, 1).cmp_w(&total(&skip_last, 0)) == Ordering::Greater {
        for (i, &s) in skip_first.iter().enumerate() {
            selected[i + 1] = s;
        }
    } else {
        for (i, &s) in skip_last.iter().enumerate() {
            selected[i] = s;
        }
    }
    selected
}

fn commit<W: Weight>(
    instance: &EdgeWeightedGraph<'_, W>,
    edges: &[u32],
    selected: &[bool],
    matching: &mut Matching,
) {
    for (i, &e) in edges.iter().enumerate() {
        if selected[i] {
            let (u, v) = instance.graph().endpoints(e);
            matching.match_pair(u, v);
        }
    }
}
