//! Membership tests for the graph classes used by the algorithms,
//! reductions and classifier.

use crate::colouring::PropertyKind;
use crate::engine::{decide, Decision, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{complement, induced_subgraph_find, named, Graph, NamedGraph};
use std::fmt;
use std::str::FromStr;

/// True iff `g` has no induced subgraph isomorphic to `h` (`h` has at most
/// eight vertices).
pub fn is_h_free(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(induced_subgraph_find(g, h)?.is_none())
}

/// Disjoint union of paths: acyclic with maximum degree at most two.
pub fn is_linear_forest(h: &Graph) -> bool {
    h.is_forest() && h.max_degree() <= 2
}

pub fn is_p4_free(g: &Graph) -> bool {
    is_h_free(g, &named("P4")).expect("P4 is within the pattern bound")
}

/// Partition of `V(g)` into at most `t` cliques (`t <= 3`), found as a
/// proper `t`-colouring of the complement. Empty cliques are omitted.
pub fn clique_cover(g: &Graph, t: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if t > 3 {
        return Err(Error::InvalidParameter(format!(
            "clique covers are only searched for t <= 3, got {t}"
        )));
    }
    let co = complement(g);
    match decide(&co, t, PropertyKind::Proper, &SearchBudget::unlimited())? {
        Decision::Yes(c) => Ok(Some(
            c.classes().into_iter().filter(|cl| !cl.is_empty()).collect(),
        )),
        Decision::No => Ok(None),
        Decision::Exhausted => Err(Error::BudgetExhausted),
    }
}

/// Coverable by two cliques.
pub fn is_cobipartite(g: &Graph) -> bool {
    clique_cover(g, 2).expect("t = 2 is supported").is_some()
}

/// Split graphs are exactly the `(2P2, C4, C5)`-free graphs.
pub fn is_split(g: &Graph) -> bool {
    ["2P2", "C4", "C5"]
        .iter()
        .all(|h| is_h_free(g, &named(h)).expect("pattern within bound"))
}

/// Clique and independent set of a split graph, from the degree sequence:
/// with degrees sorted descending, the first `m` vertices, where `m` is
/// the largest index with `d_m >= m - 1`, form a clique.
pub fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if !is_split(g) {
        return None;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (1..=order.len())
        .rev()
        .find(|&i| g.degree(order[i - 1]) + 1 >= i)
        .unwrap_or(0);
    let mut clique = order[..m].to_vec();
    let mut indep = order[m..].to_vec();
    clique.sort_unstable();
    indep.sort_unstable();
    Some((clique, indep))
}

/// A class of graphs with a recogniser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassQuery {
    HFree(NamedGraph),
    LinearForest,
    Bipartite,
    CoBipartite,
    Split,
    CliqueCoverable(usize),
    P4Free,
}

impl FromStr for ClassQuery {
    type Err = Error;

    /// Tags: `bipartite`, `co-bipartite`, `split`, `linear-forest`,
    /// `p4-free`, `clique-cover:<t>`, or `<H>-free` for a named `H` such as
    /// `3P1+P2-free`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "bipartite" => return Ok(ClassQuery::Bipartite),
            "co-bipartite" | "cobipartite" => return Ok(ClassQuery::CoBipartite),
            "split" => return Ok(ClassQuery::Split),
            "linear-forest" => return Ok(ClassQuery::LinearForest),
            "p4-free" => return Ok(ClassQuery::P4Free),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("clique-cover:") {
            let k = rest.parse::<usize>().map_err(|_| {
                Error::InvalidParameter(format!("bad clique-cover size `{rest}`"))
            })?;
            return Ok(ClassQuery::CliqueCoverable(k));
        }
        if let Some(h) = t.strip_suffix("-free") {
            let h = NamedGraph::parse(h)?;
            let size = h.graph().n();
            if size > crate::graph::DEFAULT_PATTERN_BOUND {
                return Err(Error::PatternTooLarge {
                    size,
                    bound: crate::graph::DEFAULT_PATTERN_BOUND,
                });
            }
            return Ok(ClassQuery::HFree(h));
        }
        Err(Error::InvalidParameter(format!("unknown class `{t}`")))
    }
}

impl fmt::Display for ClassQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassQuery::HFree(h) => write!(f, "{h}-free"),
            ClassQuery::LinearForest => f.write_str("linear-forest"),
            ClassQuery::Bipartite => f.write_str("bipartite"),
            ClassQuery::CoBipartite => f.write_str("co-bipartite"),
            ClassQuery::Split => f.write_str("split"),
            ClassQuery::CliqueCoverable(t) => write!(f, "clique-cover:{t}"),
            ClassQuery::P4Free => f.write_str("p4-free"),
        }
    }
}

/// Evidence accompanying a recognition answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An induced copy of the forbidden graph (pattern vertex `i` maps to
    /// entry `i`).
    Embedding(Vec<usize>),
    /// A partition certifying membership (sides, cliques, or clique plus
    /// independent set).
    Partition(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub member: bool,
    pub witness: Option<Witness>,
}

fn sides(side: &[bool]) -> Vec<Vec<usize>> {
    let a = (0..side.len()).filter(|&v| !side[v]).collect();
    let b = (0..side.len()).filter(|&v| side[v]).collect();
    vec![a, b]
}

pub fn recognize(g: &Graph, q: &ClassQuery) -> Result<Recognition> {
    let r = |member, witness| Ok(Recognition { member, witness });
    match q {
        ClassQuery::HFree(h) => {
            let found = induced_subgraph_find(g, &h.graph())?;
            r(found.is_none(), found.map(Witness::Embedding))
        }
        ClassQuery::P4Free => {
            let found = induced_subgraph_find(g, &named("P4"))?;
            r(found.is_none(), found.map(Witness::Embedding))
        }
        ClassQuery::LinearForest => r(is_linear_forest(g), None),
        ClassQuery::Bipartite => {
            let side = g.bipartition();
            r(side.is_some(), side.map(|s| Witness::Partition(sides(&s))))
        }
        ClassQuery::CoBipartite => {
            let cover = clique_cover(g, 2)?;
            r(cover.is_some(), cover.map(Witness::Partition))
        }
        ClassQuery::CliqueCoverable(t) => {
            let cover = clique_cover(g, *t)?;
            r(cover.is_some(), cover.map(Witness::Partition))
        }
        ClassQuery::Split => {
            let part = split_partition(g);
            r(part.is_some(), part.map(|(k, i)| Witness::Partition(vec![k, i])))
        }
    }
}

/// Convenience wrapper: membership only.
pub fn is_member(g: &Graph, q: &ClassQuery) -> Result<bool> {
    Ok(recognize(g, q)?.member)
}
