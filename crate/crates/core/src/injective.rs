//! Polynomial-time injective colouring for H-free graphs with `H` an induced
//! subgraph of `P1+P4`, `2P1+P3`, `3P1+P2` or `4P1`.
//!
//! Every algorithm returns `(colours, colouring)` and re-verifies the
//! colouring before returning it.

use crate::colouring::{Colouring, PropertyKind};
use crate::engine::max_matching;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph_find, named, Graph, NamedGraph};
use crate::recognize::{is_h_free, is_p4_free};
use crate::verify::verify;
use std::fmt;

pub type Solution = (usize, Colouring);

/// May `u` and `v` share a colour in an injective colouring of `g`?
/// They must be non-adjacent and have no common neighbour.
fn pairable(g: &Graph, mark: &mut [bool], u: usize, v: usize) -> bool {
    if g.has_edge(u, v) {
        return false;
    }
    for &w in g.neighbours(u) {
        mark[w] = true;
    }
    let shared = g.neighbours(v).iter().any(|&w| mark[w]);
    for &w in g.neighbours(u) {
        mark[w] = false;
    }
    !shared
}

/// Optimal colouring of `vertices` in which classes have size at most two
/// and pairs must be compatible in the host graph `g`. Returns the
/// classes; their number is `|vertices| - μ` for the maximum matching μ of
/// the compatibility graph.
pub fn optimal_2injective_within(g: &Graph, vertices: &[usize]) -> Vec<Vec<usize>> {
    let mut mark = vec![false; g.n()];
    let mut pairs = Graph::new(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if pairable(g, &mut mark, vertices[i], vertices[j]) {
                pairs.push_edge_unchecked(i, j);
            }
        }
    }
    let m = max_matching(&pairs);
    let mut classes = Vec::with_capacity(vertices.len() - m.size());
    for i in 0..vertices.len() {
        match m.mate(i) {
            Some(j) if j < i => {}
            Some(j) => classes.push(vec![vertices[i], vertices[j]]),
            None => classes.push(vec![vertices[i]]),
        }
    }
    classes
}

/// Colouring from a list of classes; colours are numbered by first
/// appearance in vertex order.
fn from_classes(n: usize, classes: &[Vec<usize>]) -> Colouring {
    let mut c = vec![usize::MAX; n];
    for (i, cl) in classes.iter().enumerate() {
        for &v in cl {
            c[v] = i;
        }
    }
    debug_assert!(c.iter().all(|&x| x != usize::MAX));
    Colouring::new(c).normalized()
}

fn certified(g: &Graph, c: Colouring, what: &str) -> Result<Solution> {
    match verify(g, &c, PropertyKind::Injective)? {
        Ok(()) => Ok((c.distinct_colours(), c)),
        Err(v) => Err(Error::Internal(format!("{what} produced a non-injective colouring ({v})"))),
    }
}

/// Optimal injective colouring among those whose classes have size at most
/// two: pairs are the edges of a maximum matching in the graph of
/// compatible pairs (the dominating edges of the complement).
pub fn optimal_2injective(g: &Graph) -> Solution {
    let all: Vec<usize> = (0..g.n()).collect();
    let classes = optimal_2injective_within(g, &all);
    certified(g, from_classes(g.n(), &classes), "2-injective matching")
        .expect("compatible pairs always give an injective colouring")
}

fn require_free(g: &Graph, h: &str) -> Result<()> {
    if let Some(emb) = induced_subgraph_find(g, &named(h))? {
        return Err(Error::Precondition(format!(
            "graph contains an induced {h} on vertices {emb:?}"
        )));
    }
    Ok(())
}

/// Solves each component with `solve` and reuses colours across
/// components.
fn per_component(g: &Graph, solve: impl Fn(&Graph) -> Result<Solution>) -> Result<Solution> {
    let mut colour = vec![0; g.n()];
    for comp in g.components() {
        let (_, c) = solve(&g.induced(&comp))?;
        for (i, &v) in comp.iter().enumerate() {
            colour[v] = c.get(i);
        }
    }
    certified(g, Colouring::new(colour), "component combination")
}

/// `P4`-free graphs: connected ones have diameter at most two, so each
/// component needs all-distinct colours.
pub fn injective_p4free(g: &Graph) -> Result<Solution> {
    require_free(g, "P4")?;
    per_component(g, |h| Ok((h.n(), Colouring::new((0..h.n()).collect()))))
}

/// `(P1+P4)`-free graphs. With an induced `P4`, every colour class has at
/// most two vertices.
pub fn injective_p1p4free(g: &Graph) -> Result<Solution> {
    require_free(g, "P1+P4")?;
    if is_p4_free(g) {
        return injective_p4free(g);
    }
    Ok(optimal_2injective(g))
}

/// The partition of the remaining vertices by their unique neighbour in an
/// independent triple `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriplePartition {
    pub u: [usize; 3],
    /// Vertices with no neighbour in `u`.
    pub t0: Vec<usize>,
    /// `t[i]`: vertices whose only neighbour in `u` is `u[i]`.
    pub t: [Vec<usize>; 3],
}

impl TriplePartition {
    /// Partition for `u` if `u` is independent and no other vertex has two
    /// neighbours in it.
    pub fn new(g: &Graph, u: [usize; 3]) -> Option<Self> {
        let [a, b, c] = u;
        if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
            return None;
        }
        let mut t0 = Vec::new();
        let mut t: [Vec<usize>; 3] = Default::default();
        for v in 0..g.n() {
            if u.contains(&v) {
                continue;
            }
            let hits: Vec<usize> = (0..3).filter(|&i| g.has_edge(v, u[i])).collect();
            match hits.as_slice() {
                [] => t0.push(v),
                [i] => t[*i].push(v),
                _ => return None,
            }
        }
        Some(TriplePartition { u, t0, t })
    }

    pub fn t_cliques(&self, g: &Graph) -> bool {
        self.t.iter().all(|ti| {
            ti.iter()
                .enumerate()
                .all(|(a, &x)| ti[a + 1..].iter().all(|&y| g.has_edge(x, y)))
        })
    }

    /// Number of other `T`-sets in which `v` (a member of `t[i]`) has a
    /// neighbour.
    pub fn grade(&self, g: &Graph, i: usize, v: usize) -> usize {
        (0..3)
            .filter(|&j| j != i && self.t[j].iter().any(|&w| g.has_edge(v, w)))
            .count()
    }
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))
    })
}

/// `4P1`-free graphs. Classes have at most three vertices; besides the best
/// 2-injective colouring, every independent triple with clique `T`-sets is
/// tried as a class, together with `p` further triples of 0-graded
/// vertices, the rest coloured optimally in pairs.
pub fn injective_4p1free(g: &Graph) -> Result<Solution> {
    require_free(g, "4P1")?;
    let n = g.n();
    let (base, base_c) = optimal_2injective(g);
    let mut best: (usize, Option<Vec<Vec<usize>>>) = (base, None);
    for u in triples(n) {
        let Some(part) = TriplePartition::new(g, u) else {
            continue;
        };
        // in a 4P1-free graph an independent triple dominates
        if !part.t0.is_empty() || !part.t_cliques(g) {
            continue;
        }
        let mut zero: [Vec<usize>; 3] = Default::default();
        let mut rest = Vec::new();
        for i in 0..3 {
            for &v in &part.t[i] {
                if part.grade(g, i, v) == 0 {
                    zero[i].push(v);
                } else {
                    rest.push(v);
                }
            }
        }
        let q1 = zero.iter().map(Vec::len).min().unwrap();
        for p in (0..=q1).rev() {
            let mut pool = rest.clone();
            for z in &zero {
                pool.extend_from_slice(&z[p..]);
            }
            pool.sort_unstable();
            let paired = optimal_2injective_within(g, &pool);
            let total = 1 + p + paired.len();
            if total < best.0 {
                let mut classes = vec![u.to_vec()];
                for j in 0..p {
                    classes.push(vec![zero[0][j], zero[1][j], zero[2][j]]);
                }
                classes.extend(paired);
                best = (total, Some(classes));
            }
        }
    }
    let c = match best.1 {
        None => base_c,
        Some(classes) => from_classes(n, &classes),
    };
    let sol = certified(g, c, "4P1-free algorithm")?;
    if sol.0 != best.0 {
        return Err(Error::Internal(format!(
            "4P1-free algorithm counted {} colours but used {}",
            best.0, sol.0
        )));
    }
    Ok(sol)
}

/// `(2P1+P3)`-free graphs: per component, `4P1`-free components use
/// [`injective_4p1free`]; otherwise every class has at most two vertices.
pub fn injective_2p1p3free(g: &Graph) -> Result<Solution> {
    require_free(g, "2P1+P3")?;
    per_component(g, |h| {
        if is_h_free(h, &named("4P1"))? {
            injective_4p1free(h)
        } else {
            Ok(optimal_2injective(h))
        }
    })
}

/// `(3P1+P2)`-free graphs. Per component: `4P1`-free components use
/// [`injective_4p1free`]. Otherwise classes have at most three vertices,
/// and a triple class `U` either leaves an undominated vertex (then all
/// other classes are singletons, `n - 2` colours) or is the only triple
/// (then the rest is coloured optimally in pairs).
pub fn injective_3p1p2free(g: &Graph) -> Result<Solution> {
    require_free(g, "3P1+P2")?;
    per_component(g, |h| {
        if is_h_free(h, &named("4P1"))? {
            return injective_4p1free(h);
        }
        let n = h.n();
        let (base, base_c) = optimal_2injective(h);
        let mut best: (usize, Option<Vec<Vec<usize>>>) = (base, None);
        for u in triples(n) {
            let Some(part) = TriplePartition::new(h, u) else {
                continue;
            };
            let others: Vec<usize> = (0..n).filter(|v| !u.contains(v)).collect();
            let (total, classes) = if !part.t0.is_empty() {
                let mut classes = vec![u.to_vec()];
                classes.extend(others.iter().map(|&v| vec![v]));
                (n - 2, classes)
            } else {
                let paired = optimal_2injective_within(h, &others);
                let mut classes = vec![u.to_vec()];
                let total = 1 + paired.len();
                classes.extend(paired);
                (total, classes)
            };
            if total < best.0 {
                best = (total, Some(classes));
            }
        }
        let c = match best.1 {
            None => base_c,
            Some(classes) => from_classes(n, &classes),
        };
        certified(h, c, "3P1+P2-free algorithm")
    })
}

/// Which algorithm [`injective_dispatch`] uses for a forbidden graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    P4Free,
    FourP1Free,
    P1P4Free,
    TwoP1P3Free,
    ThreeP1P2Free,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::P4Free => "P4-free",
            Route::FourP1Free => "4P1-free",
            Route::P1P4Free => "(P1+P4)-free",
            Route::TwoP1P3Free => "(2P1+P3)-free",
            Route::ThreeP1P2Free => "(3P1+P2)-free",
        })
    }
}

/// Strongest algorithm covering `h`-free graphs: the first of `P4`, `4P1`,
/// `P1+P4`, `2P1+P3`, `3P1+P2` that contains `h` as an induced subgraph.
pub fn route_for(h: &Graph) -> Result<Route> {
    let routes = [
        ("P4", Route::P4Free),
        ("4P1", Route::FourP1Free),
        ("P1+P4", Route::P1P4Free),
        ("2P1+P3", Route::TwoP1P3Free),
        ("3P1+P2", Route::ThreeP1P2Free),
    ];
    for (name, route) in routes {
        if induced_subgraph_find(&named(name), h)?.is_some() {
            return Ok(route);
        }
    }
    Err(Error::Unsupported(format!(
        "no polynomial injective algorithm for this H ({} vertices, {} edges)",
        h.n(),
        h.m()
    )))
}

/// Runs the algorithm for `h`-free graphs after checking that `g` is
/// `h`-free.
pub fn injective_dispatch(g: &Graph, h: &NamedGraph) -> Result<(Route, Solution)> {
    let hg = h.graph();
    let route = route_for(&hg)?;
    if let Some(emb) = induced_subgraph_find(g, &hg)? {
        return Err(Error::Precondition(format!(
            "graph is not {h}-free: induced copy on vertices {emb:?}"
        )));
    }
    let sol = match route {
        Route::P4Free => injective_p4free(g)?,
        Route::FourP1Free => injective_4p1free(g)?,
        Route::P1P4Free => injective_p1p4free(g)?,
        Route::TwoP1P3Free => injective_2p1p3free(g)?,
        Route::ThreeP1P2Free => injective_3p1p2free(g)?,
    };
    Ok((route, sol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(r: Result<Solution>) -> usize {
        r.unwrap().0
    }

    #[test]
    fn two_injective_examples() {
        assert_eq!(optimal_2injective(&named("P3")).0, 3);
        let (k, c) = optimal_2injective(&named("P4"));
        assert_eq!(k, 3);
        assert_eq!(c.get(0), c.get(3));
        assert_eq!(optimal_2injective(&named("C6")).0, 3);
    }

    #[test]
    fn p4free_examples() {
        assert_eq!(count(injective_p4free(&named("K3"))), 3);
        assert_eq!(count(injective_p4free(&named("2K3"))), 3);
        assert_eq!(count(injective_p4free(&named("K22"))), 4);
        assert!(matches!(injective_p4free(&named("P4")), Err(Error::Precondition(_))));
    }

    #[test]
    fn p1p4free_examples() {
        assert_eq!(count(injective_p1p4free(&named("P4"))), 3);
        assert_eq!(count(injective_p1p4free(&named("C5"))), 5);
        assert_eq!(count(injective_p1p4free(&named("K14"))), 5);
    }

    #[test]
    fn four_p1_free_examples() {
        let (k, c) = injective_4p1free(&named("3K3")).unwrap();
        assert_eq!(k, 3);
        for cl in c.classes() {
            assert_eq!(cl.len(), 3);
            // one vertex from each triangle
            let mut comps: Vec<usize> = cl.iter().map(|v| v / 3).collect();
            comps.sort_unstable();
            assert_eq!(comps, vec![0, 1, 2]);
        }
        assert_eq!(count(injective_4p1free(&named("C5"))), 5);
        assert_eq!(count(injective_4p1free(&named("K33"))), 6);
    }

    #[test]
    fn two_p1_p3_free_examples() {
        assert_eq!(count(injective_2p1p3free(&named("C5"))), 5);
        assert_eq!(count(injective_2p1p3free(&named("K33"))), 6);
        let c6 = named("C6");
        assert!(is_h_free(&c6, &named("2P1+P3")).unwrap());
        assert_eq!(count(injective_2p1p3free(&c6)), 3);
    }

    #[test]
    fn three_p1_p2_free_examples() {
        assert_eq!(count(injective_3p1p2free(&named("K13"))), 4);
        assert_eq!(count(injective_3p1p2free(&named("3K3"))), 3);
        assert_eq!(count(injective_3p1p2free(&named("C5"))), 5);
    }

    #[test]
    fn dispatch_examples() {
        let (route, (k, _)) = injective_dispatch(&named("K22"), &NamedGraph::parse("P4").unwrap()).unwrap();
        assert_eq!((route, k), (Route::P4Free, 4));
        let (route, (k, _)) = injective_dispatch(&named("C5"), &NamedGraph::parse("3P1").unwrap()).unwrap();
        assert_eq!((route, k), (Route::FourP1Free, 5));
        let (_, (k, _)) = injective_dispatch(&named("3K3"), &NamedGraph::parse("4P1").unwrap()).unwrap();
        assert_eq!(k, 3);
        assert!(matches!(
            injective_dispatch(&named("C5"), &NamedGraph::parse("2P1+P4").unwrap()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            injective_dispatch(&named("P4"), &NamedGraph::parse("P4").unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn host_graph_constraints_matter() {
        // two leaves of a star share the centre; inside G - centre they
        // look unrelated, but they may not share a colour in G
        let g = named("K13");
        let classes = optimal_2injective_within(&g, &[1, 2, 3]);
        assert_eq!(classes.len(), 3);
    }
}
