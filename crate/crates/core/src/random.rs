//! Seeded random members of graph classes, by rejection sampling from
//! class-aware proposals.

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::recognize::{is_member, ClassQuery};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Proposals tried before giving up.
pub const REJECTION_BUDGET: usize = 20_000;

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.push_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Random `t`-partite graph (parts assigned uniformly).
fn multipartite(rng: &mut ChaCha8Rng, n: usize, t: usize, p: f64) -> Graph {
    let part: Vec<usize> = (0..n).map(|_| rng.random_range(0..t.max(1))).collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] && rng.random_bool(p) {
                g.push_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Cograph built by random unions and joins of single vertices.
fn cograph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut parts: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut g = Graph::new(n);
    while parts.len() > 1 {
        let i = rng.random_range(0..parts.len());
        let a = parts.swap_remove(i);
        let j = rng.random_range(0..parts.len());
        let b = parts.swap_remove(j);
        if rng.random_bool(0.5) {
            for &u in &a {
                for &v in &b {
                    g.push_edge_unchecked(u, v);
                }
            }
        }
        parts.push([a, b].concat());
    }
    g
}

fn linear_forest(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for w in order.windows(2) {
        if rng.random_bool(0.7) {
            g.push_edge_unchecked(w[0], w[1]);
        }
    }
    g
}

fn split(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let in_clique: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let p = rng.random_range(0.1..0.9);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let edge = match (in_clique[u], in_clique[v]) {
                (true, true) => true,
                (false, false) => false,
                _ => rng.random_bool(p),
            };
            if edge {
                g.push_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Candidate drawn to make membership likely: direct constructions where
/// the class has one, otherwise a mix of sparse, dense and complemented
/// random graphs.
fn propose(rng: &mut ChaCha8Rng, class: &ClassQuery, n: usize) -> Graph {
    match class {
        ClassQuery::Bipartite => {
            let p = rng.random_range(0.1..0.9);
            multipartite(rng, n, 2, p)
        }
        ClassQuery::CoBipartite => {
            let p = rng.random_range(0.1..0.9);
            complement(&multipartite(rng, n, 2, p))
        }
        ClassQuery::CliqueCoverable(t) => {
            let p = rng.random_range(0.1..0.9);
            complement(&multipartite(rng, n, *t, p))
        }
        ClassQuery::Split => split(rng, n),
        ClassQuery::LinearForest => linear_forest(rng, n),
        ClassQuery::P4Free => cograph(rng, n),
        ClassQuery::HFree(_) => match rng.random_range(0..4) {
            0 => cograph(rng, n),
            1 => {
                let t = rng.random_range(1..=3);
                let p = rng.random_range(0.2..1.0);
                complement(&multipartite(rng, n, t, p))
            }
            _ => {
                let p = rng.random_range(0.05..0.95);
                gnp(rng, n, p)
            }
        },
    }
}

/// A graph on `n` vertices in `class`, determined by `seed`.
pub fn random_instance(class: &ClassQuery, n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = propose(&mut rng, class, n);
        if is_member(&g, class)? {
            return Ok(g);
        }
    }
    Err(Error::BudgetExhausted)
}
