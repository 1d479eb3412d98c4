//! Synthetic benchmark graphs: paths, cycles, square-ish grids, uniform
//! random G(n, m), and random regular graphs.

use std::collections::HashSet;

use vwmatch_core::rng::{fisher_yates, SplitMix64};
use vwmatch_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("G(n, m) needs m <= n(n-1)/2, got n={n}, m={m}")]
    TooManyEdges { n: usize, m: usize },
    #[error("a {degree}-regular graph needs n*degree even and n > degree, got n={n}")]
    BadRegularParameters { n: usize, degree: usize },
}

/// Path 0–1–…–(n−1).
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, edges).expect("path endpoints are in range")
}

/// Cycle through all n vertices (for n = 2 this degenerates to one edge).
pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 2 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, edges).expect("cycle endpoints are in range")
}

/// Axis-aligned grid with about `n` vertices: `r×c` where `r = ⌊√n⌋` and
/// `c = ⌊n/r⌋`, so the actual vertex count `r·c` may fall slightly short of
/// the request.
pub fn grid_graph(n: usize) -> Graph {
    if n == 0 {
        return Graph::from_edges(0, Vec::<(usize, usize)>::new()).unwrap();
    }
    let r = (n as f64).sqrt().floor() as usize;
    let r = r.max(1);
    let c = n / r;
    let at = |row: usize, col: usize| row * c + col;
    let mut edges = Vec::with_capacity(2 * r * c);
    for row in 0..r {
        for col in 0..c {
            if col + 1 < c {
                edges.push((at(row, col), at(row, col + 1)));
            }
            if row + 1 < r {
                edges.push((at(row, col), at(row + 1, col)));
            }
        }
    }
    Graph::from_edges(r * c, edges).expect("grid endpoints are in range")
}

/// Uniform random simple graph with exactly `m` distinct edges, drawn by
/// rejection sampling.
pub fn gnm_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    let max = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max {
        return Err(GenerateError::TooManyEdges { n, m });
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<u64> = HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.next_below(n as u64);
        let v = rng.next_below(n as u64);
        if u == v {
            continue;
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        if seen.insert(lo * n as u64 + hi) {
            edges.push((lo as usize, hi as usize));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("sampled endpoints are in range"))
}

/// Random `degree`-regular simple graph via the pairing model: `n·degree`
/// vertex stubs are shuffled and paired off; a pairing containing a
/// self-loop or duplicate edge is discarded wholesale and redrawn.  For the
/// small degrees used here the acceptance probability per attempt is a few
/// percent, so the expected number of attempts is modest.
pub fn random_regular_graph(n: usize, degree: usize, seed: u64) -> Result<Graph, GenerateError> {
    if degree == 0 {
        return Ok(Graph::from_edges(n, Vec::<(usize, usize)>::new()).unwrap());
    }
    if n * degree % 2 != 0 || n <= degree {
        return Err(GenerateError::BadRegularParameters { n, degree });
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
    'attempt: loop {
        fisher_yates(&mut stubs, &mut rng);
        let mut seen: HashSet<u64> = HashSet::with_capacity(stubs.len());
        let mut edges = Vec::with_capacity(stubs.len() / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'attempt;
            }
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert(lo as u64 * n as u64 + hi as u64) {
                continue 'attempt;
            }
            edges.push((lo as usize, hi as usize));
        }
        return Ok(Graph::from_edges(n, edges).expect("stub endpoints are in range"));
    }
}
