//! Graph and matching file formats.
//!
//! Two graph formats are supported: Matrix Market coordinate files (the
//! common exchange format for sparse matrices, read as adjacency structure)
//! and a plain whitespace edge list.  Both are undirected: self-loops and
//! duplicate entries are dropped by [`Graph`] construction and counted.

use std::fs;
use std::io::Write;
use std::path::Path;

use vwmatch_core::{Graph, GraphError, Matching, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: expected a Matrix Market banner '%%MatrixMarket matrix coordinate ...'")]
    BadBanner { line: usize },
    #[error("line {line}: only coordinate-format Matrix Market files describe graphs (got '{format}')")]
    NotCoordinate { line: usize, format: String },
    #[error("line {line}: adjacency matrix must be square (got {rows}x{cols})")]
    NotSquare { line: usize, rows: usize, cols: usize },
    #[error("line {line}: malformed size line, expected 'rows cols entries'")]
    BadSizeLine { line: usize },
    #[error("line {line}: malformed entry '{text}'")]
    BadEntry { line: usize, text: String },
    #[error("line {line}: index {index} outside declared bound {bound}")]
    IndexOutOfBounds { line: usize, index: usize, bound: usize },
    #[error("declared {declared} entries but found {found}")]
    EntryCountMismatch { declared: usize, found: usize },
    #[error("graph construction failed: {0}")]
    Graph(#[from] GraphError),
    #[error("matching line {line}: vertex pair '{text}' is malformed")]
    BadMatchingLine { line: usize, text: String },
}

fn read_to_string(path: &Path) -> Result<String, ParseError> {
    fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a Matrix Market coordinate file as an undirected graph.
///
/// The value field (pattern, real, integer, complex) is ignored; symmetric
/// and general files alike contribute one undirected edge per stored entry.
/// Indices are 1-based in the file and shifted to 0-based.
pub fn parse_matrix_market(path: &Path) -> Result<Graph, ParseError> {
    let text = read_to_string(path)?;
    let mut lines = text.lines().enumerate();

    let (ln, banner) = lines.next().ok_or(ParseError::BadBanner { line: 1 })?;
    let tokens: Vec<&str> = banner.split_whitespace().collect();
    if tokens.len() < 3 || !tokens[0].eq_ignore_ascii_case("%%MatrixMarket") || !tokens[1].eq_ignore_ascii_case("matrix") {
        return Err(ParseError::BadBanner { line: ln + 1 });
    }
    if !tokens[2].eq_ignore_ascii_case("coordinate") {
        return Err(ParseError::NotCoordinate {
            line: ln + 1,
            format: tokens[2].to_string(),
        });
    }

    let mut size: Option<(usize, usize)> = None; // (n, declared entries)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut found = 0usize;
    for (ln, raw) in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match size {
            None => {
                let parse = |s: &str| s.parse::<usize>().ok();
                match (
                    fields.get(0).and_then(|s| parse(s)),
                    fields.get(1).and_then(|s| parse(s)),
                    fields.get(2).and_then(|s| parse(s)),
                ) {
                    (Some(rows), Some(cols), Some(nnz)) if fields.len() == 3 => {
                        if rows != cols {
                            return Err(ParseError::NotSquare { line: ln + 1, rows, cols });
                        }
                        size = Some((rows, nnz));
                        edges.reserve(nnz);
                    }
                    _ => return Err(ParseError::BadSizeLine { line: ln + 1 }),
                }
            }
            Some((n, _)) => {
                // entry: "i j" optionally followed by one or two value fields
                let bad = || ParseError::BadEntry {
                    line: ln + 1,
                    text: line.to_string(),
                };
                if fields.len() < 2 {
                    return Err(bad());
                }
                let i: usize = fields[0].parse().map_err(|_| bad())?;
                let j: usize = fields[1].parse().map_err(|_| bad())?;
                for &idx in &[i, j] {
                    if idx == 0 || idx > n {
                        return Err(ParseError::IndexOutOfBounds {
                            line: ln + 1,
                            index: idx,
                            bound: n,
                        });
                    }
                }
                edges.push((i - 1, j - 1));
                found += 1;
            }
        }
    }
    let (n, declared) = size.ok_or(ParseError::BadSizeLine { line: text.lines().count() + 1 })?;
    if found != declared {
        return Err(ParseError::EntryCountMismatch { declared, found });
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Reads a whitespace edge list: one `u v` pair per line, 0-based, `#`
/// comments allowed.  A `# n=<count>` comment pins the vertex count;
/// otherwise it is the largest endpoint plus one.
pub fn parse_edge_list(path: &Path) -> Result<Graph, ParseError> {
    let text = read_to_string(path)?;
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_seen: Option<usize> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if declared_n.is_none() {
                if let Some(value) = comment.trim().strip_prefix("n=") {
                    declared_n = value.trim().parse::<usize>().ok();
                }
            }
            continue;
        }
        let (u, v) = parse_pair(line, ln)?;
        max_seen = Some(max_seen.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = declared_n.unwrap_or_else(|| max_seen.map_or(0, |m| m + 1));
    Ok(Graph::from_edges(n, edges)?)
}

fn parse_pair(line: &str, ln: usize) -> Result<(usize, usize), ParseError> {
    let bad = || ParseError::BadMatchingLine {
        line: ln + 1,
        text: line.to_string(),
    };
    let mut it = line.split_whitespace();
    let u: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let v: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((u, v))
}

/// Why a matching file does not describe a valid matching of the graph.
#[derive(Debug, PartialEq, Eq)]
pub enum MatchingDefect {
    NotAnEdge { u: Vertex, v: Vertex },
    VertexReused { v: Vertex },
    SelfPair { v: Vertex },
}

impl std::fmt::Display for MatchingDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatchingDefect::NotAnEdge { u, v } => write!(f, "pair ({u}, {v}) is not a graph edge"),
            MatchingDefect::VertexReused { v } => write!(f, "vertex {v} appears in two pairs"),
            MatchingDefect::SelfPair { v } => write!(f, "vertex {v} paired with itself"),
        }
    }
}

/// Reads a matching file (one `u v` pair per line, `#` comments) against a
/// graph.  Pairs outside the vertex range are parse errors; structural
/// problems (non-edges, reused vertices) are reported as defects so callers
/// can distinguish "unreadable" from "invalid".
pub fn read_matching(path: &Path, graph: &Graph) -> Result<Result<Matching, MatchingDefect>, ParseError> {
    let text = read_to_string(path)?;
    let mut matching = Matching::new(graph.vertex_count());
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (u, v) = parse_pair(line, ln)?;
        for &x in &[u, v] {
            if x >= graph.vertex_count() {
                return Err(ParseError::IndexOutOfBounds {
                    line: ln + 1,
                    index: x,
                    bound: graph.vertex_count(),
                });
            }
        }
        let (u, v) = (u as Vertex, v as Vertex);
        if u == v {
            return Ok(Err(MatchingDefect::SelfPair { v }));
        }
        if !graph.has_edge(u, v) {
            return Ok(Err(MatchingDefect::NotAnEdge { u, v }));
        }
        if matching.is_matched(u) {
            return Ok(Err(MatchingDefect::VertexReused { v: u }));
        }
        if matching.is_matched(v) {
            return Ok(Err(MatchingDefect::VertexReused { v }));
        }
        matching.match_pair(u, v);
    }
    Ok(Ok(matching))
}

/// Writes a graph as an edge list with a `# n=<count>` header, one edge per
/// line in edge-id order.
pub fn write_edge_list(graph: &Graph, path: &Path) -> std::io::Result<()> {
    let mut out = String::with_capacity(16 * graph.edge_count() + 32);
    out.push_str(&format!("# n={}\n", graph.vertex_count()));
    for e in 0..graph.edge_count() as u32 {
        let (u, v) = graph.endpoints(e);
        out.push_str(&format!("{u} {v}\n"));
    }
    let mut file = fs::File::create(path)?;
    file.write_all(out.as_bytes())
}

/// Format selection for graph inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    MatrixMarket,
    EdgeList,
}

/// Parses `path` as `format`, or by extension when `format` is `None`
/// (`.mtx` means Matrix Market, anything else an edge list).
pub fn parse_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    let format = format.unwrap_or_else(|| {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => GraphFormat::MatrixMarket,
            _ => GraphFormat::EdgeList,
        }
    });
    match format {
        GraphFormat::MatrixMarket => parse_matrix_market(path),
        GraphFormat::EdgeList => parse_edge_list(path),
    }
}
