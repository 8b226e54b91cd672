use super::{Meter, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

/// Vertex-disjoint set of edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks disjointness and that every pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self
                .mate
                .iter()
                .enumerate()
                .all(|(u, m)| m.is_none_or(|v| self.mate[v] == Some(u) && g.has_edge(u, v)))
    }
}

/// Maximum-cardinality matching by Edmonds' blossom algorithm, `O(n^3)`.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate: Vec<usize> = vec![usize::MAX; n];
    // greedy start
    for &(u, v) in g.edges() {
        if mate[u] == usize::MAX && mate[v] == usize::MAX {
            mate[u] = v;
            mate[v] = u;
        }
    }
    for root in 0..n {
        if mate[root] == usize::MAX {
            if let Some(end) = find_augmenting_path(g, &mate, root) {
                augment(&mut mate, &end.1, end.0);
            }
        }
    }
    Matching {
        mate: mate
            .into_iter()
            .map(|m| (m != usize::MAX).then_some(m))
            .collect(),
    }
}

fn augment(mate: &mut [usize], parent: &[usize], mut v: usize) {
    while v != usize::MAX {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

fn lca(mate: &[usize], base: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut used = vec![false; mate.len()];
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == usize::MAX {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

#[allow(clippy::too_many_arguments)]
fn mark_path(
    mate: &[usize],
    base: &[usize],
    parent: &mut [usize],
    blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// BFS for an augmenting path from `root`; returns its free end and the
/// parent array needed to flip it.
fn find_augmenting_path(g: &Graph, mate: &[usize], root: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in g.neighbours(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != usize::MAX && parent[mate[to]] != usize::MAX) {
                let cur = lca(mate, &base, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &base, &mut parent, &mut blossom, v, cur, to);
                mark_path(mate, &base, &mut parent, &mut blossom, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == usize::MAX {
                parent[to] = v;
                if mate[to] == usize::MAX {
                    return Some((to, parent));
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

/// Is there a perfect matching of the balanced bipartite graph `g` (sides
/// given by `side`) in which no two edges induce `2K2`?
///
/// Two matching edges `a1b1`, `a2b2` induce `2K2` exactly when neither
/// `a1b2` nor `a2b1` is an edge. Exhaustive over perfect matchings.
pub fn has_connected_matching_n(g: &Graph, side: &[bool], b: &SearchBudget) -> Result<bool> {
    if side.len() != g.n() {
        return Err(Error::Precondition(format!(
            "bipartition covers {} of {} vertices",
            side.len(),
            g.n()
        )));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
        return Err(Error::Precondition(format!(
            "edge {u}-{v} lies inside one side of the bipartition"
        )));
    }
    let a: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
    let bs: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    if a.len() != bs.len() {
        return Err(Error::Precondition(format!(
            "sides have {} and {} vertices",
            a.len(),
            bs.len()
        )));
    }
    let meter = Meter::new(b);
    let mut taken = vec![false; g.n()];
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(a.len());

    fn extend(
        g: &Graph,
        a: &[usize],
        taken: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
        meter: &Meter,
    ) -> Result<bool> {
        let i = chosen.len();
        if i == a.len() {
            return Ok(true);
        }
        let x = a[i];
        for &y in g.neighbours(x) {
            if taken[y] {
                continue;
            }
            if !meter.tick() {
                return Err(Error::BudgetExhausted);
            }
            if chosen
                .iter()
                .all(|&(x2, y2)| g.has_edge(x, y2) || g.has_edge(x2, y))
            {
                taken[y] = true;
                chosen.push((x, y));
                if extend(g, a, taken, chosen, meter)? {
                    return Ok(true);
                }
                chosen.pop();
                taken[y] = false;
            }
        }
        Ok(false)
    }

    extend(g, &a, &mut taken, &mut chosen, &meter)
}
