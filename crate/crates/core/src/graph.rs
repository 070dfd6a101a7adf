//! Finite simple graphs and the generator families the stability bounds
//! are stated for: complete graphs, King's graphs, stars, and discrete tori.
//!
//! Vertices are dense indices `0..n`. Edges are stored canonically as
//! `(min, max)` pairs sorted lexicographically, so edge-to-index maps are
//! deterministic across runs. Graphs are immutable after construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph: no self-loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Wire format: `{"n": int, "edges": [[int, int], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> Self {
        GraphData { n: g.n, edges: g.edges }
    }
}

impl TryFrom<GraphData> for Graph {
    type Error = Error;

    fn try_from(data: GraphData) -> Result<Self> {
        Graph::from_edges(data.n, data.edges)
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list, normalizing each pair to
    /// `(min, max)` and sorting. Rejects self-loops, duplicate edges, and
    /// endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("graph needs at least one vertex".into()));
        }
        let mut canonical: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (x, y) in edges {
            if x == y {
                return Err(Error::InvalidEdge { x, y, reason: "self-loop" });
            }
            if x >= n || y >= n {
                return Err(Error::InvalidEdge { x, y, reason: "endpoint out of range" });
            }
            canonical.push((x.min(y), x.max(y)));
        }
        canonical.sort_unstable();
        if canonical.windows(2).any(|w| w[0] == w[1]) {
            let (x, y) = canonical
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .unwrap();
            return Err(Error::InvalidEdge { x, y, reason: "duplicate edge" });
        }
        let mut adj = vec![Vec::new(); n];
        for &(x, y) in &canonical {
            adj[x].push(y);
            adj[y].push(x);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canonical, adj })
    }

    /// Complete graph on `n` vertices: every pair connected.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for x in 0..n {
            for y in (x + 1)..n {
                edges.push((x, y));
            }
        }
        Self::from_edges(n, edges)
    }

    /// `rows x cols` King's graph: one vertex per square of a chessboard,
    /// one edge per legal king move (axis neighbors plus diagonals).
    pub fn kings(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidSize("King's graph needs both dimensions >= 1".into()));
        }
        let idx = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = idx(r, c);
                if c + 1 < cols {
                    edges.push((v, idx(r, c + 1)));
                }
                if r + 1 < rows {
                    if c > 0 {
                        edges.push((v, idx(r + 1, c - 1)));
                    }
                    edges.push((v, idx(r + 1, c)));
                    if c + 1 < cols {
                        edges.push((v, idx(r + 1, c + 1)));
                    }
                }
            }
        }
        Self::from_edges(rows * cols, edges)
    }

    /// Star graph: vertex 0 in the center, `k` leaves attached to it.
    pub fn star(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSize("star graph needs k >= 1 leaves".into()));
        }
        let edges = (1..=k).map(|leaf| (0, leaf)).collect();
        Self::from_edges(k + 1, edges)
    }

    /// Discrete torus with the given side lengths: lattice points with
    /// periodic boundary, edges between nearest neighbors along each axis.
    ///
    /// Sides below 3 are rejected; they would create self-loops or double
    /// edges and the graph would no longer be simple.
    pub fn torus(sides: &[usize]) -> Result<Self> {
        if sides.is_empty() {
            return Err(Error::InvalidSize("torus needs at least one dimension".into()));
        }
        if let Some(&bad) = sides.iter().find(|&&s| s < 3) {
            return Err(Error::InvalidSize(format!(
                "torus side {bad} is below the minimum of 3"
            )));
        }
        let n: usize = sides.iter().product();
        // Row-major index: the last axis varies fastest.
        let mut strides = vec![1usize; sides.len()];
        for axis in (0..sides.len().saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * sides[axis + 1];
        }
        let mut edges = Vec::with_capacity(sides.len() * n);
        for v in 0..n {
            for (axis, (&len, &stride)) in sides.iter().zip(&strides).enumerate() {
                let _ = axis;
                let coord = (v / stride) % len;
                let w = if coord + 1 == len { v - coord * stride } else { v + stride };
                edges.push((v, w));
            }
        }
        Self::from_edges(n, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree over all vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Total parameter count `|E| + |V|`.
    pub fn k_g(&self) -> u64 {
        (self.edges.len() + self.n) as u64
    }

    /// Position of edge `{x, y}` in the canonical edge list.
    pub fn edge_index(&self, x: usize, y: usize) -> Option<usize> {
        let key = (x.min(y), x.max(y));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edge_index(x, y).is_some()
    }

    /// True when every vertex pair is connected.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }
}
