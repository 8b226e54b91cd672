use crate::colouring::{Colouring, PropertyKind};
use crate::engine::{enumerate, forced_equal_counted, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph, Multigraph};
use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    AcyclicEdge,
    StarEdge,
    StarVertex,
    AcyclicEquality,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::AcyclicEdge => "acyclic-edge-Fk",
            GadgetKind::StarEdge => "star-edge-Fk",
            GadgetKind::StarVertex => "star-vertex-V",
            GadgetKind::AcyclicEquality => "acyclic-equality-S'",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetObject {
    Graph(Graph),
    Multigraph(Multigraph),
}

impl GadgetObject {
    pub fn n(&self) -> usize {
        match self {
            GadgetObject::Graph(g) => g.n(),
            GadgetObject::Multigraph(m) => m.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            GadgetObject::Graph(g) => g.m(),
            GadgetObject::Multigraph(m) => m.m(),
        }
    }

    /// The graph whose vertex colourings are the gadget's colourings: the
    /// line graph for edge gadgets.
    pub fn colouring_graph(&self) -> Graph {
        match self {
            GadgetObject::Graph(g) => g.clone(),
            GadgetObject::Multigraph(m) => line_graph(m),
        }
    }
}

/// A generated gadget with its designated elements.
///
/// `designated` holds edge ids for edge gadgets and vertex indices
/// otherwise; `terminals` are the vertices identified with the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub param: usize,
    pub object: GadgetObject,
    pub designated: Vec<usize>,
    pub terminals: Vec<usize>,
}

/// Outcome of checking one gadget claim by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: &'static str,
    pub holds: bool,
    pub nodes: u64,
}

impl Gadget {
    /// Number of colours the gadget's claims are stated for.
    pub fn colours(&self) -> usize {
        match self.kind {
            GadgetKind::StarVertex => 3,
            _ => self.param,
        }
    }

    pub fn property(&self) -> PropertyKind {
        match self.kind {
            GadgetKind::AcyclicEdge | GadgetKind::AcyclicEquality => PropertyKind::Acyclic,
            GadgetKind::StarEdge | GadgetKind::StarVertex => PropertyKind::Star,
        }
    }

    /// Checks the gadget's claims by exact search. Every claim shares the
    /// budget separately. Vertex gadgets with `g < 3` carry no claim.
    pub fn verify_claims(&self, b: &SearchBudget) -> Result<Vec<ClaimOutcome>> {
        let k = self.colours();
        let p = self.property();
        let host = self.object.colouring_graph();
        let mut out = Vec::new();
        if self.kind == GadgetKind::StarVertex && self.param < 3 {
            return Ok(out);
        }
        let (holds, nodes) = forced_equal_counted(&host, k, p, &self.designated, b)?;
        out.push(ClaimOutcome {
            claim: "designated elements forced equal",
            holds,
            nodes,
        });
        if let (GadgetKind::AcyclicEdge, GadgetObject::Multigraph(m)) = (self.kind, &self.object) {
            let (t1, t2) = (self.terminals[0], self.terminals[1]);
            let mut found = false;
            let mut visited = 0u64;
            enumerate(&host, k, p, b, |c| {
                visited += 1;
                if !edge_bichromatic_path(m, c, t1, t2) {
                    found = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            out.push(ClaimOutcome {
                claim: "some colouring has no bichromatic terminal path",
                holds: found,
                nodes: visited,
            });
        }
        Ok(out)
    }
}

/// Is there a `u`-`v` path in `m` using edges of at most two colours? The
/// colouring is indexed by edge id.
pub fn edge_bichromatic_path(m: &Multigraph, c: &Colouring, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let inc = m.incidence();
    let k = c.num_colours();
    for a in 0..k {
        for b in a + 1..k.max(a + 2) {
            let mut seen = vec![false; m.n()];
            seen[u] = true;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                if x == v {
                    return true;
                }
                for &id in &inc[x] {
                    let col = c.get(id);
                    if col != a && col != b {
                        continue;
                    }
                    let (p, q) = m.endpoints(id);
                    let y = if p == x { q } else { p };
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    false
}

fn need_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("gadget needs k >= 3, got {k}")));
    }
    Ok(())
}

/// The acyclic edge-colouring gadget on vertices `v1..v14` (indices
/// `0..14`). Designated edges are `v1v2` and `v13v14`; terminals `v1`, `v14`.
pub fn acyclic_edge_gadget(k: usize) -> Result<Gadget> {
    need_k(k)?;
    let mut m = Multigraph::new(14);
    let v = |i: usize| i - 1;
    let simple = [
        (1, 2),
        (2, 4),
        (3, 5),
        (4, 6),
        (5, 7),
        (7, 8),
        (8, 9),
        (9, 11),
        (10, 11),
        (10, 12),
        (12, 13),
        (13, 14),
    ];
    let mut ids = Vec::new();
    for (a, b) in simple {
        ids.push(m.add_edge(v(a), v(b))?);
    }
    for (a, b) in [(2, 3), (4, 5), (6, 7), (8, 10), (11, 13)] {
        m.add_bundle(v(a), v(b), k - 2)?;
    }
    Ok(Gadget {
        kind: GadgetKind::AcyclicEdge,
        param: k,
        object: GadgetObject::Multigraph(m),
        designated: vec![ids[0], ids[11]],
        terminals: vec![v(1), v(14)],
    })
}

/// The star edge-colouring gadget on vertices `v1..v10` (indices `0..10`).
/// Designated edges are `v1v2` and `v7v8`; terminals `v1`, `v8`.
pub fn star_edge_gadget(k: usize) -> Result<Gadget> {
    need_k(k)?;
    let mut m = Multigraph::new(10);
    let v = |i: usize| i - 1;
    let first = m.add_edge(v(1), v(2))?;
    m.add_edge(v(2), v(3))?;
    m.add_bundle(v(3), v(4), k - 2)?;
    m.add_edge(v(4), v(5))?;
    m.add_bundle(v(5), v(6), k - 2)?;
    m.add_edge(v(6), v(7))?;
    let last = m.add_edge(v(7), v(8))?;
    m.add_edge(v(4), v(9))?;
    m.add_edge(v(5), v(10))?;
    Ok(Gadget {
        kind: GadgetKind::StarEdge,
        param: k,
        object: GadgetObject::Multigraph(m),
        designated: vec![first, last],
        terminals: vec![v(1), v(8)],
    })
}

/// Index of `f_i` (1-based `i`) in the star vertex gadget with parameter `g`.
pub fn star_vertex_f(g: usize, i: usize) -> usize {
    24 * g + i - 1
}

/// The star 3-colouring vertex gadget: a cycle `d_1..d_{12g}`, a pendant
/// `e_i` on each `d_i`, and `f_1..f_4` with `f_i` pendant on `e_{3ig}`.
///
/// Layout: `d_i = i-1`, `e_i = 12g+i-1`, `f_i = 24g+i-1`.
pub fn star_vertex_gadget(g: usize) -> Result<Gadget> {
    if g < 1 {
        return Err(Error::InvalidParameter("vertex gadget needs g >= 1".into()));
    }
    let len = 12 * g;
    let mut gr = Graph::new(24 * g + 4);
    for i in 0..len {
        gr.push_edge_unchecked(i, (i + 1) % len);
    }
    for i in 0..len {
        gr.push_edge_unchecked(i, len + i);
    }
    for i in 1..=4 {
        gr.push_edge_unchecked(len + 3 * i * g - 1, star_vertex_f(g, i));
    }
    Ok(Gadget {
        kind: GadgetKind::StarVertex,
        param: g,
        object: GadgetObject::Graph(gr),
        designated: (1..=4).map(|i| star_vertex_f(g, i)).collect(),
        terminals: (1..=4).map(|i| star_vertex_f(g, i)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn censuses() {
        for k in 3..=6 {
            let a = acyclic_edge_gadget(k).unwrap();
            assert_eq!((a.object.n(), a.object.m()), (14, 12 + 5 * (k - 2)));
            let s = star_edge_gadget(k).unwrap();
            assert_eq!((s.object.n(), s.object.m()), (10, 7 + 2 * (k - 2)));
        }
        for g in 1..=4 {
            let v = star_vertex_gadget(g).unwrap();
            assert_eq!((v.object.n(), v.object.m()), (24 * g + 4, 24 * g + 4));
            let GadgetObject::Graph(gr) = &v.object else { unreachable!() };
            assert!(gr.max_degree() <= 3);
            assert_eq!(girth(gr), Some(12 * g));
        }
        assert!(acyclic_edge_gadget(2).is_err());
        assert!(star_edge_gadget(2).is_err());
        assert!(star_vertex_gadget(0).is_err());
    }

    #[test]
    fn designated_edges_sit_on_terminals() {
        let a = acyclic_edge_gadget(4).unwrap();
        let GadgetObject::Multigraph(m) = &a.object else { unreachable!() };
        assert_eq!(m.endpoints(a.designated[0]), (0, 1));
        assert_eq!(m.endpoints(a.designated[1]), (12, 13));
        let s = star_edge_gadget(4).unwrap();
        let GadgetObject::Multigraph(m) = &s.object else { unreachable!() };
        assert_eq!(m.endpoints(s.designated[0]), (0, 1));
        assert_eq!(m.endpoints(s.designated[1]), (6, 7));
        let degrees: Vec<usize> = (0..10).map(|v| m.degree(v)).collect();
        assert_eq!(degrees, [1, 2, 3, 4, 4, 3, 2, 1, 1, 1]);
    }

    #[test]
    fn edge_gadget_claims_hold_at_k3() {
        let b = SearchBudget::nodes(100_000_000);
        for gadget in [acyclic_edge_gadget(3).unwrap(), star_edge_gadget(3).unwrap()] {
            for c in gadget.verify_claims(&b).unwrap() {
                assert!(c.holds, "{}: {}", gadget.kind, c.claim);
            }
        }
    }
}
