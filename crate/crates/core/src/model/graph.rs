use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::grid::{GridKind, Vertex};
use crate::model::code::window_points;

pub const MAX_WINDOW_VERTICES: u64 = 10_000_000;
pub const MAX_HYPERCUBE_DIM: usize = 20;

/// A simple undirected graph on vertices `0..n`. Adjacency lists are sorted
/// and symmetric; optional labels carry lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<Vertex>>,
}

impl FiniteGraph {
    pub fn empty(n: usize) -> Self {
        FiniteGraph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = FiniteGraph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<Vertex>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Adds `{a, b}`; returns whether the edge is new.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        let n = self.n();
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange(x, n));
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        match self.adj[a].binary_search(&b) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[a].insert(pos, b);
                let pos = self.adj[b].binary_search(&a).unwrap_err();
                self.adj[b].insert(pos, a);
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[Vertex]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Vertex> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn index_of_label(&self, label: &Vertex) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Closed ball of radius `r` around `v`, sorted.
    pub fn ball(&self, v: usize, r: u32) -> Vec<usize> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        let mut out = vec![v];
        while let Some(x) = queue.pop_front() {
            if dist[x] == r {
                continue;
            }
            for &y in &self.adj[x] {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn balls(&self, r: u32) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.ball(v, r)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.ball(0, u32::MAX - 1).len() == self.n()
    }

    pub fn complete(n: usize) -> Self {
        let mut g = FiniteGraph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = FiniteGraph::empty(n);
        for a in 0..n {
            g.add_edge(a, (a + 1) % n).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = FiniteGraph::empty(n);
        for a in 1..n {
            g.add_edge(a - 1, a).unwrap();
        }
        g
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let mut g = FiniteGraph::empty(n);
        for leaf in 1..n {
            g.add_edge(0, leaf).unwrap();
        }
        g
    }
}

/// The subgraph of `grid` induced on `Q_m = [-m, m]^dim`, labeled with
/// lattice coordinates in lexicographic order.
pub fn window(grid: GridKind, m: u32) -> Result<FiniteGraph> {
    grid.validate()?;
    let dim = grid.dimension();
    let side = 2 * m as u64 + 1;
    let count = (side as u128).pow(dim as u32);
    if count > MAX_WINDOW_VERTICES as u128 {
        return Err(Error::CapExceeded {
            what: "window vertices",
            size: count,
            cap: MAX_WINDOW_VERTICES as u128,
        });
    }
    let m = m as i64;
    let index = |p: &[i64]| -> Option<usize> {
        let mut idx = 0u64;
        for &x in p {
            if x < -m || x > m {
                return None;
            }
            idx = idx * side + (x + m) as u64;
        }
        Some(idx as usize)
    };
    let labels: Vec<Vertex> = window_points(dim, m).map(Vertex).collect();
    let mut g = FiniteGraph::empty(labels.len());
    for (i, p) in labels.iter().enumerate() {
        for d in grid.neighbor_offsets(p.coords()) {
            let q: Vec<i64> = p.coords().iter().zip(&d).map(|(a, b)| a + b).collect();
            if let Some(j) = index(&q) {
                if i < j {
                    g.add_edge(i, j)?;
                }
            }
        }
    }
    g.with_labels(labels)
}

/// The binary cube `H_n`: vertex `i` is labeled by its bits, coordinate `j`
/// holding bit `n - 1 - j` (so labels read like the binary expansion of `i`).
pub fn hypercube(n: usize) -> Result<FiniteGraph> {
    if n == 0 || n > MAX_HYPERCUBE_DIM {
        return Err(Error::Parameter(format!(
            "hypercube dimension {n} outside 1..={MAX_HYPERCUBE_DIM}"
        )));
    }
    let size = 1usize << n;
    let mut g = FiniteGraph::empty(size);
    for v in 0..size {
        for bit in 0..n {
            let u = v ^ (1 << bit);
            if v < u {
                g.add_edge(v, u)?;
            }
        }
    }
    let labels = (0..size).map(|v| hypercube_label(n, v)).collect();
    g.with_labels(labels)
}

pub fn hypercube_label(n: usize, v: usize) -> Vertex {
    Vertex((0..n).map(|j| ((v >> (n - 1 - j)) & 1) as i64).collect())
}

pub fn hypercube_index(label: &Vertex) -> usize {
    label.coords().iter().fold(0, |acc, &b| (acc << 1) | (b & 1) as usize)
}
