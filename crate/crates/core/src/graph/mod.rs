//! Simple graphs, multigraphs, named families and the structural
//! transformations used by the solvers and reductions.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] remembers the order in
//! which edges were inserted; every neighbour list is exactly the result of
//! appending endpoints in that order. The reductions read neighbour order as
//! a rotation system, and the text format round-trips it because edges are
//! written back in insertion order.

mod io;
mod iso;
mod multigraph;
mod named;
mod ops;

pub use io::{parse_graph, parse_multigraph, write_graph, write_multigraph};
pub use iso::{
    canonical_form, induced_subgraph_find, is_isomorphic, small_graphs, DEFAULT_PATTERN_BOUND,
};
pub use multigraph::Multigraph;
pub use named::{named, NamedGraph};
pub use ops::{add_dominating_clique, complement, degeneracy, girth, line_graph, subdivide};

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u, v));
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of `v` in rotation (insertion) order.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&b)
    }

    /// Dense adjacency matrix, convenient for the small-graph searches.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        let mut mat = vec![vec![false; n]; n];
        for &(u, v) in &self.edges {
            mat[u][v] = true;
            mat[v][u] = true;
        }
        mat
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Edges keep their relative insertion order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.push_edge_unchecked(index[u], index[v]);
            }
        }
        g
    }

    /// Graph with the listed vertices removed; the survivors keep their
    /// relative order. Returns the graph and the list of surviving original
    /// indices.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-colouring as a side flag per vertex, if one exists. Each
    /// component's smallest vertex is placed on side `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &y in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.clone();
        for _ in 0..other.n() {
            g.add_vertex();
        }
        for &(u, v) in &other.edges {
            g.push_edge_unchecked(u + shift, v + shift);
        }
        g
    }

    /// Largest clique size, by exhaustive branch and bound. Intended for the
    /// small graphs handled by the exact engine.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, cand: &[usize], size: usize, best: &mut usize) {
            if size > *best {
                *best = size;
            }
            for (i, &v) in cand.iter().enumerate() {
                if size + cand.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                grow(g, &next, size + 1, best);
            }
        }
        let all: Vec<usize> = (0..self.n()).collect();
        let mut best = 0;
        grow(self, &all, 0, &mut best);
        best
    }

    /// Sorted `(min, max)` edge pairs; the labelled-graph identity.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Caller guarantees a new, valid, loop-free edge.
    pub(crate) fn push_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u, v));
    }
}

/// Equality as labelled graphs. Rotation order is not compared.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.edge_set() == other.edge_set()
    }
}

impl Eq for Graph {}
