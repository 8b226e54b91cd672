//! Brute-force oracles shared by the integration tests. They share no code
//! with the library's verifiers or search.
#![allow(dead_code)]

use hfree_core::{Graph, PropertyKind};
use rand::Rng;

fn proper(g: &Graph, c: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| c[u] != c[v])
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// Every two-colour subgraph is a forest.
fn acyclic(g: &Graph, c: &[usize]) -> bool {
    let k = c.iter().max().map_or(0, |m| m + 1);
    for a in 0..k {
        for b in a + 1..k {
            let mut parent: Vec<usize> = (0..g.n()).collect();
            for &(u, v) in g.edges() {
                let pair = [c[u], c[v]];
                if pair.contains(&a) && pair.contains(&b) {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru == rv {
                        return false;
                    }
                    parent[ru] = rv;
                }
            }
        }
    }
    true
}

/// No path `w x y z` with `c(w) = c(y)` and `c(x) = c(z)`.
fn star(g: &Graph, c: &[usize]) -> bool {
    for x in 0..g.n() {
        for &y in g.neighbours(x) {
            for &w in g.neighbours(x) {
                if w == y || c[w] != c[y] {
                    continue;
                }
                for &z in g.neighbours(y) {
                    if z != x && z != w && c[z] == c[x] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn rainbow_neighbourhoods(g: &Graph, c: &[usize]) -> bool {
    (0..g.n()).all(|v| {
        let mut cols: Vec<usize> = g.neighbours(v).iter().map(|&w| c[w]).collect();
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn valid(g: &Graph, c: &[usize], p: PropertyKind) -> bool {
    proper(g, c)
        && match p {
            PropertyKind::Proper => true,
            PropertyKind::Acyclic => acyclic(g, c),
            PropertyKind::Star => star(g, c),
            PropertyKind::Injective => rainbow_neighbourhoods(g, c),
        }
}

/// Calls `f` on every map `V -> 0..k`; stops when `f` returns true.
pub fn any_map(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if n == 0 {
        return f(&[]);
    }
    if k == 0 {
        return false;
    }
    let mut c = vec![0; n];
    loop {
        if f(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_count(g: &Graph, k: usize, p: PropertyKind) -> u64 {
    let mut count = 0;
    any_map(g.n(), k, |c| {
        if valid(g, c, p) {
            count += 1;
        }
        false
    });
    count
}

pub fn brute_exists(g: &Graph, k: usize, p: PropertyKind) -> bool {
    any_map(g.n(), k, |c| valid(g, c, p))
}

pub fn brute_chromatic(g: &Graph, p: PropertyKind) -> usize {
    (0..=g.n()).find(|&k| brute_exists(g, k, p)).expect("n colours always suffice")
}

pub fn brute_list_colourable(g: &Graph, lists: &[Vec<usize>]) -> bool {
    let k = lists.iter().flatten().max().map_or(0, |m| m + 1);
    any_map(g.n(), k, |c| {
        proper(g, c) && (0..g.n()).all(|v| lists[v].contains(&c[v]))
    })
}

/// Tries every bijection from the left side to the right side.
pub fn brute_connected_matching(g: &Graph, side: &[bool]) -> bool {
    let a: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
    let b: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    any_map(n, n, |perm| {
        let mut seen = vec![false; n];
        for &j in perm {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (a[i], b[perm[i]])).collect();
        connected_matching(g, side, &pairs)
    })
}

/// A perfect matching between the sides whose edges pairwise see an edge
/// between them.
pub fn connected_matching(g: &Graph, side: &[bool], pairs: &[(usize, usize)]) -> bool {
    let mut covered = vec![false; g.n()];
    for &(x, y) in pairs {
        if side[x] == side[y] || covered[x] || covered[y] || !g.has_edge(x, y) {
            return false;
        }
        covered[x] = true;
        covered[y] = true;
    }
    covered.iter().all(|&c| c)
        && pairs.iter().enumerate().all(|(i, &(x, y))| {
            pairs[i + 1..].iter().all(|&(p, q)| {
                g.has_edge(x, p) || g.has_edge(x, q) || g.has_edge(y, p) || g.has_edge(y, q)
            })
        })
}

/// Smallest number of classes over all partitions into compatible classes
/// of size at most two.
pub fn brute_force_2injective(g: &Graph) -> usize {
    fn ok(g: &Graph, u: usize, v: usize) -> bool {
        !g.has_edge(u, v)
            && !g
                .neighbours(u)
                .iter()
                .any(|w| g.neighbours(v).contains(w))
    }
    fn rec(g: &Graph, done: &mut Vec<bool>, classes: usize, best: &mut usize) {
        if classes >= *best {
            return;
        }
        let Some(v) = (0..g.n()).find(|&v| !done[v]) else {
            *best = classes;
            return;
        };
        done[v] = true;
        rec(g, done, classes + 1, best);
        for u in v + 1..g.n() {
            if !done[u] && ok(g, u, v) {
                done[u] = true;
                rec(g, done, classes + 1, best);
                done[u] = false;
            }
        }
        done[v] = false;
    }
    let mut best = g.n();
    rec(g, &mut vec![false; g.n()], 0, &mut best);
    best
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
