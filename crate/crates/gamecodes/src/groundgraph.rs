//! The groundgraph: the finite digraph tokens move on.
//!
//! Builders cover the graphs this crate treats as fixtures: Nim heaps,
//! stars into a leaf, the fixed two-cycle example, and the gamma_t family.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("line {line}: expected `vertices <n>` header before {found:?}")]
    MissingHeader { line: usize, found: String },
    #[error("line {line}: duplicate `vertices` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse {text:?}")]
    BadSyntax { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("no `vertices` header found")]
    NoHeader,
}

/// Finite digraph with follower sets and optional vertex labels.
///
/// Edges form a set, not a multiset; endpoints are 0-based indices below
/// `n`. Vertices with no out-neighbors are sinks (the texts' "leaves").
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundGraph {
    n: usize,
    out: Vec<BTreeSet<usize>>,
    labels: Vec<Option<String>>,
}

impl GroundGraph {
    #[must_use]
    pub fn new(n: usize) -> Self {
        GroundGraph {
            n,
            out: vec![BTreeSet::new(); n],
            labels: vec![None; n],
        }
    }

    /// # Panics
    /// If an endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        self.out[u].insert(v);
    }

    pub fn set_label(&mut self, u: usize, label: impl Into<String>) {
        assert!(u < self.n, "vertex out of range");
        self.labels[u] = Some(label.into());
    }

    #[must_use]
    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels[u].as_deref()
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn out_neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.out[u]
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    /// Vertices with empty follower sets, ascending.
    #[must_use]
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.out[u].is_empty()).collect()
    }

    /// True iff the graph has no directed cycle; a self-loop is a cycle.
    ///
    /// Kahn peeling: repeatedly remove vertices of in-degree 0. Anything
    /// left over sits on or behind a cycle.
    #[must_use]
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n];
        for u in 0..self.n {
            for &v in &self.out[u] {
                indeg[v] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&u| indeg[u] == 0).collect();
        let mut removed = 0usize;
        while let Some(u) = queue.pop() {
            removed += 1;
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push(v);
                }
            }
        }
        removed == self.n
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted up by `self.n`.
    #[must_use]
    pub fn disjoint_sum(&self, other: &GroundGraph) -> GroundGraph {
        let mut g = GroundGraph::new(self.n + other.n);
        for u in 0..self.n {
            for &v in &self.out[u] {
                g.add_edge(u, v);
            }
            if let Some(l) = &self.labels[u] {
                g.set_label(u, l.clone());
            }
        }
        for u in 0..other.n {
            for &v in &other.out[u] {
                g.add_edge(self.n + u, self.n + v);
            }
            if let Some(l) = &other.labels[u] {
                g.set_label(self.n + u, l.clone());
            }
        }
        g
    }

    /// Parse the text format described in [`GroundGraph::serialize`].
    pub fn parse(text: &str) -> Result<GroundGraph, GraphParseError> {
        let mut graph: Option<GroundGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let first = tokens.next().unwrap();
            if first == "vertices" {
                if graph.is_some() {
                    return Err(GraphParseError::DuplicateHeader { line });
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .filter(|_| tokens.next().is_none())
                    .ok_or_else(|| GraphParseError::BadSyntax {
                        line,
                        text: content.to_string(),
                    })?;
                graph = Some(GroundGraph::new(n));
                continue;
            }
            let g = graph.as_mut().ok_or_else(|| GraphParseError::MissingHeader {
                line,
                found: content.to_string(),
            })?;
            if first == "label" {
                let u: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                    GraphParseError::BadSyntax {
                        line,
                        text: content.to_string(),
                    }
                })?;
                let name = tokens.next().ok_or_else(|| GraphParseError::BadSyntax {
                    line,
                    text: content.to_string(),
                })?;
                if tokens.next().is_some() {
                    return Err(GraphParseError::BadSyntax {
                        line,
                        text: content.to_string(),
                    });
                }
                if u >= g.n {
                    return Err(GraphParseError::VertexOutOfRange { line, vertex: u, n: g.n });
                }
                g.set_label(u, name);
                continue;
            }
            // Edge line: `<u> -> <v>`.
            let parts: Vec<&str> = content.split_whitespace().collect();
            let bad = || GraphParseError::BadSyntax {
                line,
                text: content.to_string(),
            };
            if parts.len() != 3 || parts[1] != "->" {
                return Err(bad());
            }
            let u: usize = parts[0].parse().map_err(|_| bad())?;
            let v: usize = parts[2].parse().map_err(|_| bad())?;
            for &w in &[u, v] {
                if w >= g.n {
                    return Err(GraphParseError::VertexOutOfRange { line, vertex: w, n: g.n });
                }
            }
            g.add_edge(u, v);
        }
        graph.ok_or(GraphParseError::NoHeader)
    }

    /// Text format: a `vertices <n>` header, `label <u> <name>` lines, and
    /// one `<u> -> <v>` line per edge, all 0-based. `#` starts a comment.
    #[must_use]
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.n);
        for u in 0..self.n {
            if let Some(l) = &self.labels[u] {
                let _ = writeln!(out, "label {u} {l}");
            }
        }
        for u in 0..self.n {
            for &v in &self.out[u] {
                let _ = writeln!(out, "{u} -> {v}");
            }
        }
        out
    }
}

/// Nim heap of size `k`: a leaf (vertex 0) plus chain vertices z_0..z_{k-1}
/// (vertices 1..k), with z_j -> z_i for i < j and z_j -> leaf for every j,
/// so a move shrinks the heap to any smaller size including zero.
#[must_use]
pub fn nim_heap(k: usize) -> GroundGraph {
    assert!(k >= 1, "heap size must be positive");
    let mut g = GroundGraph::new(k + 1);
    g.set_label(0, "leaf");
    for j in 0..k {
        g.set_label(j + 1, format!("z{j}"));
        g.add_edge(j + 1, 0);
        for i in 0..j {
            g.add_edge(j + 1, i + 1);
        }
    }
    g
}

/// Star: a leaf (vertex 0) plus z_0..z_{k-1} (vertices 1..k), each with the
/// single edge into the leaf.
#[must_use]
pub fn star_into_leaf(k: usize) -> GroundGraph {
    assert!(k >= 1, "star size must be positive");
    let mut g = GroundGraph::new(k + 1);
    g.set_label(0, "leaf");
    for i in 0..k {
        g.set_label(i + 1, format!("z{i}"));
        g.add_edge(i + 1, 0);
    }
    g
}

/// Fixed 5-vertex cyclic graph: a leaf (vertex 0), the two-cycle
/// z_0 <-> z_1, and z_2, z_3 each pointing into the leaf.
#[must_use]
pub fn example2_graph() -> GroundGraph {
    let mut g = GroundGraph::new(5);
    g.set_label(0, "leaf");
    for i in 0..4 {
        g.set_label(i + 1, format!("z{i}"));
    }
    g.add_edge(1, 2);
    g.add_edge(2, 1);
    g.add_edge(3, 0);
    g.add_edge(4, 0);
    g
}

/// The cyclic family gamma_t with J = 2^(t-1): vertices x_1..x_J
/// (indices 0..J) and y_1..y_J (indices J..2J); x_i's only follower is
/// y_i; y_k's followers are every y_i with i < k and every x_j with j != k.
///
/// For t >= 2 the graph has no sinks; t = 1 degenerates to x_1 -> y_1.
#[must_use]
pub fn gamma_t(t: u32) -> GroundGraph {
    assert!(t >= 1, "t must be positive");
    let j_count = 1usize << (t - 1);
    let mut g = GroundGraph::new(2 * j_count);
    for i in 1..=j_count {
        g.set_label(i - 1, format!("x{i}"));
        g.set_label(j_count + i - 1, format!("y{i}"));
        g.add_edge(i - 1, j_count + i - 1);
    }
    for k in 1..=j_count {
        let yk = j_count + k - 1;
        for i in 1..k {
            g.add_edge(yk, j_count + i - 1);
        }
        for jj in 1..=j_count {
            if jj != k {
                g.add_edge(yk, jj - 1);
            }
        }
    }
    g
}
