use super::{Graph, Multigraph};
use std::collections::VecDeque;

/// Complement graph; edges are inserted in lexicographic order.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = g.adjacency_matrix();
    let mut out = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] {
                out.push_edge_unchecked(u, v);
            }
        }
    }
    out
}

/// Line graph: vertex `i` is edge id `i`; two edge ids are adjacent iff they
/// share an endpoint. Parallel edges become adjacent vertices.
pub fn line_graph(m: &Multigraph) -> Graph {
    let edges = m.edges();
    let mut out = Graph::new(edges.len());
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push_edge_unchecked(i, j);
            }
        }
    }
    out
}

/// Subdivides every edge once. Old vertices keep their indices; the new
/// vertex on edge `i` (insertion order) is `n + i`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(n + g.m());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        out.push_edge_unchecked(u, n + i);
        out.push_edge_unchecked(n + i, v);
    }
    out
}

/// Length of a shortest cycle, `None` for forests. BFS from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                // nothing shorter can close from this depth on
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for &y in g.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Degeneracy by repeatedly peeling a vertex of minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut result = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .unwrap();
        result = result.max(deg[v]);
        removed[v] = true;
        for &w in g.neighbours(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    result
}

/// Adds `m` pairwise adjacent vertices `n..n+m`, each adjacent to every
/// original vertex.
pub fn add_dominating_clique(g: &Graph, m: usize) -> Graph {
    let n = g.n();
    let mut out = g.clone();
    for _ in 0..m {
        out.add_vertex();
    }
    for a in n..n + m {
        for b in a + 1..n + m {
            out.push_edge_unchecked(a, b);
        }
        for v in 0..n {
            out.push_edge_unchecked(a, v);
        }
    }
    out
}
