//! Certificates for the four colouring disciplines.
//!
//! Every failed check returns a [`Violation`] whose witness alone already
//! breaks the property; [`Violation::rechecks`] confirms this against the
//! colouring.

use crate::colouring::{Colouring, EdgeColouring, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph, Multigraph};
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// Witness `[u, v]`: an edge with both ends coloured alike.
    ImproperEdge,
    /// Witness: the vertices of a two-coloured cycle in cyclic order.
    BichromaticCycle,
    /// Witness `[a, b, c, d]`: a two-coloured path on four vertices.
    BichromaticP4,
    /// Witness `[w, a, b]`: `a` and `b` are neighbours of `w` coloured alike.
    RepeatedNeighbourColour,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::ImproperEdge => "improper-edge",
            ViolationKind::BichromaticCycle => "bichromatic-cycle",
            ViolationKind::BichromaticP4 => "bichromatic-p4",
            ViolationKind::RepeatedNeighbourColour => "repeated-neighbour-colour",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

/// Outcome of a successful verification run: the colouring is valid, or a
/// witnessed violation.
pub type Check = std::result::Result<(), Violation>;

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.name())?;
        for v in &self.witness {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl Violation {
    fn new(kind: ViolationKind, witness: Vec<usize>) -> Self {
        Violation { kind, witness }
    }

    /// True iff the witness by itself violates the property under `c`.
    pub fn rechecks(&self, g: &Graph, c: &Colouring) -> bool {
        let w = &self.witness;
        let n = g.n();
        if w.iter().any(|&v| v >= n) || c.len() != n {
            return false;
        }
        let col = |v: usize| c.get(v);
        let distinct = {
            let mut s = w.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == w.len()
        };
        match self.kind {
            ViolationKind::ImproperEdge => {
                w.len() == 2 && g.has_edge(w[0], w[1]) && col(w[0]) == col(w[1])
            }
            ViolationKind::BichromaticCycle => {
                w.len() >= 3
                    && distinct
                    && (0..w.len()).all(|i| {
                        let (a, b) = (w[i], w[(i + 1) % w.len()]);
                        g.has_edge(a, b) && col(a) != col(b) && col(a) == col(w[(i + 2) % w.len()])
                    })
            }
            ViolationKind::BichromaticP4 => {
                w.len() == 4
                    && distinct
                    && (0..3).all(|i| g.has_edge(w[i], w[i + 1]))
                    && col(w[0]) == col(w[2])
                    && col(w[1]) == col(w[3])
            }
            ViolationKind::RepeatedNeighbourColour => {
                w.len() == 3
                    && distinct
                    && g.has_edge(w[0], w[1])
                    && g.has_edge(w[0], w[2])
                    && col(w[1]) == col(w[2])
            }
        }
    }
}

/// Checks `c` against discipline `p` on `g`.
///
/// The outer `Result` fails only when `c` is not total on `g`.
pub fn verify(g: &Graph, c: &Colouring, p: PropertyKind) -> Result<Check> {
    c.check_total(g.n())?;
    if let Some(v) = improper_edge(g, c) {
        return Ok(Err(v));
    }
    let found = match p {
        PropertyKind::Proper => None,
        PropertyKind::Acyclic => bichromatic_cycle(g, c),
        PropertyKind::Star => bichromatic_p4(g, c),
        PropertyKind::Injective => repeated_neighbour_colour(g, c),
    };
    Ok(found.map_or(Ok(()), Err))
}

fn improper_edge(g: &Graph, c: &Colouring) -> Option<Violation> {
    g.edges()
        .iter()
        .find(|&&(u, v)| c.get(u) == c.get(v))
        .map(|&(u, v)| Violation::new(ViolationKind::ImproperEdge, vec![u, v]))
}

fn repeated_neighbour_colour(g: &Graph, c: &Colouring) -> Option<Violation> {
    for w in 0..g.n() {
        let mut first: HashMap<usize, usize> = HashMap::new();
        for &x in g.neighbours(w) {
            if let Some(&a) = first.get(&c.get(x)) {
                return Some(Violation::new(
                    ViolationKind::RepeatedNeighbourColour,
                    vec![w, a, x],
                ));
            }
            first.insert(c.get(x), x);
        }
    }
    None
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Path between `from` and `to` using only `edges`, by BFS.
fn forest_path(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// First bichromatic cycle, scanning colour pairs in ascending order and
/// running a union-find forest check on each two-class union.
fn bichromatic_cycle(g: &Graph, c: &Colouring) -> Option<Violation> {
    let k = c.num_colours();
    for a in 0..k {
        for b in a + 1..k {
            let mut dsu = Dsu::new(g.n());
            let mut kept = Vec::new();
            for &(u, v) in g.edges() {
                let (cu, cv) = (c.get(u), c.get(v));
                if !((cu == a && cv == b) || (cu == b && cv == a)) {
                    continue;
                }
                if !dsu.union(u, v) {
                    let cycle = forest_path(g.n(), &kept, u, v);
                    return Some(Violation::new(ViolationKind::BichromaticCycle, cycle));
                }
                kept.push((u, v));
            }
        }
    }
    None
}

/// First two-coloured path `a-b-c-d` (as a subgraph). Assumes `c` proper, so
/// a bichromatic cycle always contains such a path.
fn bichromatic_p4(g: &Graph, c: &Colouring) -> Option<Violation> {
    for &(x, y) in g.edges() {
        for (b, cc) in [(x, y), (y, x)] {
            let a = g
                .neighbours(b)
                .iter()
                .copied()
                .find(|&a| a != cc && c.get(a) == c.get(cc));
            let d = g
                .neighbours(cc)
                .iter()
                .copied()
                .find(|&d| d != b && c.get(d) == c.get(b));
            if let (Some(a), Some(d)) = (a, d) {
                return Some(Violation::new(ViolationKind::BichromaticP4, vec![a, b, cc, d]));
            }
        }
    }
    None
}

/// Pairs of distinct colours used by `c`, each with the union of the two
/// classes as a vertex list.
fn two_class_unions(c: &Colouring) -> Vec<Vec<usize>> {
    let classes = c.classes();
    let mut out = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if classes[a].is_empty() || classes[b].is_empty() {
                continue;
            }
            let mut u = classes[a].clone();
            u.extend_from_slice(&classes[b]);
            u.sort_unstable();
            out.push(u);
        }
    }
    out
}

/// Star test by structure: proper, and every two-class union induces a
/// forest whose components are stars. Independent of the path-based check
/// in [`verify`].
pub fn star_by_star_forests(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_total(g.n())?;
    if improper_edge(g, c).is_some() {
        return Ok(false);
    }
    if c.distinct_colours() < 2 {
        return Ok(true);
    }
    for union in two_class_unions(c) {
        let h = g.induced(&union);
        if !h.is_forest() {
            return Ok(false);
        }
        for comp in h.components() {
            let centres = comp.iter().filter(|&&v| h.degree(v) >= 2).count();
            if centres > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Injective test via two-class unions: proper, and every union induces
/// `sP1 + tP2`.
pub fn injective_by_unions(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_total(g.n())?;
    if improper_edge(g, c).is_some() {
        return Ok(false);
    }
    for union in two_class_unions(c) {
        let h = g.induced(&union);
        if h.components().iter().any(|comp| comp.len() > 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Injective test via neighbourhoods: proper, and every open neighbourhood
/// is rainbow.
pub fn injective_by_neighbourhoods(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_total(g.n())?;
    Ok(improper_edge(g, c).is_none()
        && (0..g.n()).all(|w| {
            let mut cols: Vec<usize> = g.neighbours(w).iter().map(|&x| c.get(x)).collect();
            cols.sort_unstable();
            cols.windows(2).all(|p| p[0] != p[1])
        }))
}

/// Evaluates both injective definitions independently and reports whether
/// they agree (they always should).
pub fn injective_definitions_agree(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(injective_by_unions(g, c)? == injective_by_neighbourhoods(g, c)?)
}

/// Edge-colouring check: `p` applied to the line graph. An independent
/// edge-space checker runs alongside and must agree; disagreement is
/// reported as [`Error::Internal`]. Witnesses are edge ids.
pub fn verify_edge(m: &Multigraph, c: &EdgeColouring, p: PropertyKind) -> Result<Check> {
    if c.len() != m.m() {
        return Err(Error::NotTotal {
            expected: m.m(),
            got: c.len(),
        });
    }
    let via_line = verify(&line_graph(m), &c.as_vertex_colouring(), p)?;
    let direct = edge_space_valid(m, c, p);
    if via_line.is_ok() != direct {
        return Err(Error::Internal(format!(
            "line-graph and edge-space {p} checks disagree"
        )));
    }
    Ok(via_line)
}

/// Direct edge-space check. With a proper edge colouring every two-colour
/// union has maximum degree two, so it splits into paths and cycles: acyclic
/// forbids cycles on three or more edges, star forbids any path or cycle on
/// four or more edges.
pub fn edge_space_valid(m: &Multigraph, c: &EdgeColouring, p: PropertyKind) -> bool {
    let inc = m.incidence();
    for ids in &inc {
        let mut cols: Vec<usize> = ids.iter().map(|&e| c.get(e)).collect();
        cols.sort_unstable();
        if cols.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    match p {
        PropertyKind::Proper => true,
        PropertyKind::Acyclic | PropertyKind::Star => {
            let k = c.0.iter().max().map_or(0, |&x| x + 1);
            for a in 0..k {
                for b in a + 1..k {
                    let mut dsu = Dsu::new(m.n());
                    let mut chosen = Vec::new();
                    for (id, &(u, v)) in m.edges().iter().enumerate() {
                        if c.get(id) == a || c.get(id) == b {
                            dsu.union(u, v);
                            chosen.push(id);
                        }
                    }
                    let mut verts: HashMap<usize, usize> = HashMap::new();
                    let mut edges: HashMap<usize, usize> = HashMap::new();
                    for &id in &chosen {
                        let (u, _) = m.endpoints(id);
                        *edges.entry(dsu.find(u)).or_default() += 1;
                    }
                    let mut touched: Vec<usize> = chosen
                        .iter()
                        .flat_map(|&id| {
                            let (u, v) = m.endpoints(id);
                            [u, v]
                        })
                        .collect();
                    touched.sort_unstable();
                    touched.dedup();
                    for v in touched {
                        *verts.entry(dsu.find(v)).or_default() += 1;
                    }
                    for (root, &e) in &edges {
                        let cycle = e == verts[root];
                        let bad = match p {
                            PropertyKind::Acyclic => cycle && e >= 3,
                            _ => e >= 4,
                        };
                        if bad {
                            return false;
                        }
                    }
                }
            }
            true
        }
        PropertyKind::Injective => {
            for (id, &(u, v)) in m.edges().iter().enumerate() {
                let mut nb: Vec<usize> = inc[u].iter().chain(&inc[v]).copied().filter(|&f| f != id).collect();
                nb.sort_unstable();
                nb.dedup();
                let mut cols: Vec<usize> = nb.iter().map(|&f| c.get(f)).collect();
                cols.sort_unstable();
                if cols.windows(2).any(|w| w[0] == w[1]) {
                    return false;
                }
            }
            true
        }
    }
}
