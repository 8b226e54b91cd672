use super::equality::EqualityGadget;
use super::gadgets::{
    acyclic_edge_gadget, star_edge_gadget, star_vertex_f, star_vertex_gadget, Gadget,
    GadgetObject,
};
use crate::colouring::{Colouring, EdgeColouring, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::{add_dominating_clique, complement, line_graph, Graph, Multigraph};
use crate::verify::{verify, Check};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Output instance of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    /// Edge-colouring instance; its colourings are those of the line graph.
    Multigraph(Multigraph),
}

impl Instance {
    /// The graph whose vertex colourings solve the instance.
    pub fn colouring_graph(&self) -> Graph {
        match self {
            Instance::Graph(g) => g.clone(),
            Instance::Multigraph(m) => line_graph(m),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Multigraph(m) => m.n(),
        }
    }
}

/// What the source instance asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceProblem {
    /// A `p`-colouring of the source graph with `k` colours.
    Colouring { property: PropertyKind, k: usize },
    /// A proper `k`-edge-colouring; edges in `Graph::edges` order.
    EdgeColouring { k: usize },
    /// A proper colouring with `c(u)` drawn from `lists[u]`.
    ListColouring { lists: Vec<Vec<usize>> },
    /// A perfect matching between the sides with no induced `2K2`.
    ConnectedMatching { side: Vec<bool> },
}

/// How to turn a valid target colouring into a source solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BackTranslation {
    /// Source vertex `v` takes the colour of target vertex `rep[v]`.
    VertexRepresentative(Vec<usize>),
    /// Source edge `i` takes the colour of target edge id `rep[i]`.
    EdgeRepresentative(Vec<usize>),
    /// Target vertex `i < kept.len()` is source vertex `kept[i]`. Colours
    /// are renumbered densely in order of first use; `deleted` vertices are
    /// then reinserted greedily in reverse deletion order.
    Relabel { kept: Vec<usize>, deleted: Vec<usize> },
    /// Target vertex `palette[l]` stands for list colour `l`; a source
    /// vertex takes the list colour whose palette vertex shares its colour.
    ListRelabel { palette: Vec<usize> },
    /// Every colour class is one matching edge.
    ClassesToMatching,
}

impl BackTranslation {
    fn name(&self) -> &'static str {
        match self {
            BackTranslation::VertexRepresentative(_) => "vertex-representative",
            BackTranslation::EdgeRepresentative(_) => "edge-representative",
            BackTranslation::Relabel { .. } => "relabel-and-reinsert",
            BackTranslation::ListRelabel { .. } => "list-relabel",
            BackTranslation::ClassesToMatching => "classes-to-matching",
        }
    }
}

/// Solution of the source instance produced by back-translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceSolution {
    Vertex(Colouring),
    Edge(EdgeColouring),
    Matching(Vec<(usize, usize)>),
}

/// A reduced instance together with everything needed to map solutions
/// back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub name: &'static str,
    pub source: Graph,
    pub problem: SourceProblem,
    pub target: Instance,
    pub target_property: PropertyKind,
    pub target_k: usize,
    /// Output region per source element: per source vertex, or per source
    /// edge for the edge-colouring reductions.
    pub forward: Vec<Vec<usize>>,
    pub back: BackTranslation,
}

impl ReductionResult {
    /// Maps a colouring of [`Instance::colouring_graph`] to a source
    /// solution. The target colouring is verified first.
    pub fn back_translate(&self, c: &Colouring) -> Result<SourceSolution> {
        let host = self.target.colouring_graph();
        if let Err(v) = verify(&host, c, self.target_property)? {
            return Err(Error::Precondition(format!(
                "target colouring is not a valid {} colouring: {v}",
                self.target_property
            )));
        }
        let n = self.source.n();
        Ok(match &self.back {
            BackTranslation::VertexRepresentative(rep) => {
                SourceSolution::Vertex(Colouring::new(rep.iter().map(|&t| c.get(t)).collect()))
            }
            BackTranslation::EdgeRepresentative(rep) => {
                SourceSolution::Edge(EdgeColouring(rep.iter().map(|&t| c.get(t)).collect()))
            }
            BackTranslation::Relabel { kept, deleted } => {
                SourceSolution::Vertex(self.relabel(c, kept, deleted)?)
            }
            BackTranslation::ListRelabel { palette } => {
                let of: HashMap<usize, usize> =
                    palette.iter().enumerate().map(|(l, &t)| (c.get(t), l)).collect();
                let mut out = Vec::with_capacity(n);
                for v in 0..n {
                    let l = of.get(&c.get(v)).copied().ok_or_else(|| {
                        Error::Internal(format!("vertex {v} uses a colour absent from the palette"))
                    })?;
                    out.push(l);
                }
                SourceSolution::Vertex(Colouring::new(out))
            }
            BackTranslation::ClassesToMatching => {
                let mut pairs = Vec::new();
                for class in c.classes() {
                    match class[..] {
                        [] => {}
                        [a, b] => pairs.push((a, b)),
                        _ => {
                            return Err(Error::Internal(format!(
                                "colour class {class:?} is not a matching edge"
                            )))
                        }
                    }
                }
                SourceSolution::Matching(pairs)
            }
        })
    }

    fn relabel(&self, c: &Colouring, kept: &[usize], deleted: &[usize]) -> Result<Colouring> {
        let k = match self.problem {
            SourceProblem::Colouring { k, .. } => k,
            _ => usize::MAX,
        };
        let mut dense: HashMap<usize, usize> = HashMap::new();
        let mut out = vec![usize::MAX; self.source.n()];
        for (i, &v) in kept.iter().enumerate() {
            let next = dense.len();
            out[v] = *dense.entry(c.get(i)).or_insert(next);
        }
        if dense.len() > k {
            return Err(Error::Internal(format!(
                "source vertices use {} colours, more than k = {k}",
                dense.len()
            )));
        }
        for &v in deleted.iter().rev() {
            let used: Vec<usize> = self
                .source
                .neighbours(v)
                .iter()
                .map(|&w| out[w])
                .filter(|&x| x != usize::MAX)
                .collect();
            let free = (0..).find(|x| !used.contains(x)).expect("unbounded range");
            if free >= k {
                return Err(Error::Internal(format!("vertex {v} cannot be reinserted")));
            }
            out[v] = free;
        }
        Ok(Colouring::new(out))
    }

    /// Checks a source solution against [`ReductionResult::problem`].
    pub fn check_source(&self, s: &SourceSolution) -> Result<bool> {
        let g = &self.source;
        Ok(match (&self.problem, s) {
            (SourceProblem::Colouring { property, k }, SourceSolution::Vertex(c)) => {
                c.num_colours() <= *k && verify(g, c, *property)?.is_ok()
            }
            (SourceProblem::EdgeColouring { k }, SourceSolution::Edge(c)) => {
                c.len() == g.m()
                    && c.0.iter().all(|&x| x < *k)
                    && edge_colouring_is_proper(g, c)
            }
            (SourceProblem::ListColouring { lists }, SourceSolution::Vertex(c)) => {
                let fits: Check = verify(g, c, PropertyKind::Proper)?;
                fits.is_ok() && (0..g.n()).all(|v| lists[v].contains(&c.get(v)))
            }
            (SourceProblem::ConnectedMatching { side }, SourceSolution::Matching(pairs)) => {
                is_connected_perfect_matching(g, side, pairs)
            }
            _ => false,
        })
    }

    /// Plain-text key-value rendering of the forward map and
    /// back-translation recipe, one record per line.
    pub fn map_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "reduction {}", self.name);
        let _ = writeln!(s, "source_n {}", self.source.n());
        let _ = writeln!(s, "source_m {}", self.source.m());
        let (kind, size) = match &self.target {
            Instance::Graph(g) => ("graph", g.m()),
            Instance::Multigraph(m) => ("multigraph", m.m()),
        };
        let _ = writeln!(s, "target_kind {kind}");
        let _ = writeln!(s, "target_n {}", self.target.n());
        let _ = writeln!(s, "target_m {size}");
        let _ = writeln!(s, "target_property {}", self.target_property);
        let _ = writeln!(s, "target_k {}", self.target_k);
        let unit = match self.problem {
            SourceProblem::EdgeColouring { .. } => "edge",
            _ => "vertex",
        };
        for (i, region) in self.forward.iter().enumerate() {
            let _ = write!(s, "forward {unit} {i}");
            for t in region {
                let _ = write!(s, " {t}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "back {}", self.back.name());
        match &self.back {
            BackTranslation::VertexRepresentative(rep) | BackTranslation::EdgeRepresentative(rep) => {
                for (i, t) in rep.iter().enumerate() {
                    let _ = writeln!(s, "rep {i} {t}");
                }
            }
            BackTranslation::Relabel { kept, deleted } => {
                for (i, v) in kept.iter().enumerate() {
                    let _ = writeln!(s, "kept {i} {v}");
                }
                for v in deleted {
                    let _ = writeln!(s, "deleted {v}");
                }
            }
            BackTranslation::ListRelabel { palette } => {
                for (l, t) in palette.iter().enumerate() {
                    let _ = writeln!(s, "palette {l} {t}");
                }
            }
            BackTranslation::ClassesToMatching => {}
        }
        s
    }
}

fn edge_colouring_is_proper(g: &Graph, c: &EdgeColouring) -> bool {
    let edges = g.edges();
    (0..edges.len()).all(|i| {
        (i + 1..edges.len()).all(|j| {
            let (a, b) = edges[i];
            let (x, y) = edges[j];
            let share = a == x || a == y || b == x || b == y;
            !share || c.get(i) != c.get(j)
        })
    })
}

fn is_connected_perfect_matching(g: &Graph, side: &[bool], pairs: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; g.n()];
    for &(a, b) in pairs {
        if !g.has_edge(a, b) || side[a] == side[b] || seen[a] || seen[b] {
            return false;
        }
        seen[a] = true;
        seen[b] = true;
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    pairs.iter().enumerate().all(|(i, &(a, b))| {
        pairs[i + 1..]
            .iter()
            .all(|&(x, y)| g.has_edge(a, x) || g.has_edge(a, y) || g.has_edge(b, x) || g.has_edge(b, y))
    })
}

/// Replaces every edge `uv` by a copy of an edge gadget with `u`, `v` on its
/// terminals. Copy `i` takes the gadget's non-terminal vertices
/// `n + i*(gn-2) ..`.
fn edge_gadget_reduction(
    g: &Graph,
    gadget: &Gadget,
    name: &'static str,
    p: PropertyKind,
) -> Result<ReductionResult> {
    let GadgetObject::Multigraph(f) = &gadget.object else {
        return Err(Error::Internal("edge gadget must be a multigraph".into()));
    };
    let (t1, t2) = (gadget.terminals[0], gadget.terminals[1]);
    let inner: Vec<usize> = (0..f.n()).filter(|&v| v != t1 && v != t2).collect();
    let n = g.n();
    let mut out = Multigraph::new(n + g.m() * inner.len());
    let mut forward = Vec::with_capacity(g.m());
    let mut rep = Vec::with_capacity(g.m());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + i * inner.len();
        let place = |w: usize| {
            if w == t1 {
                u
            } else if w == t2 {
                v
            } else {
                base + inner.iter().position(|&x| x == w).expect("inner vertex")
            }
        };
        let first = out.m();
        for &(a, b) in f.edges() {
            out.add_edge(place(a), place(b))?;
        }
        forward.push((first..out.m()).collect());
        rep.push(first + gadget.designated[0]);
    }
    Ok(ReductionResult {
        name,
        source: g.clone(),
        problem: SourceProblem::EdgeColouring { k: gadget.param },
        target: Instance::Multigraph(out),
        target_property: p,
        target_k: gadget.param,
        forward,
        back: BackTranslation::EdgeRepresentative(rep),
    })
}

/// `k`-edge-colouring to acyclic `k`-edge-colouring: each edge becomes a
/// copy of the acyclic edge gadget.
pub fn reduce_edgecol_to_acyclic_edgecol(g: &Graph, k: usize) -> Result<ReductionResult> {
    let gadget = acyclic_edge_gadget(k)?;
    edge_gadget_reduction(g, &gadget, "edgecol-to-acyclic-edgecol", PropertyKind::Acyclic)
}

/// `k`-edge-colouring to star `k`-edge-colouring via the star edge gadget.
pub fn reduce_edgecol_to_star_edgecol(g: &Graph, k: usize) -> Result<ReductionResult> {
    let gadget = star_edge_gadget(k)?;
    edge_gadget_reduction(g, &gadget, "edgecol-to-star-edgecol", PropertyKind::Star)
}

/// 3-colouring (max degree 4) to star 3-colouring. Vertex `x` becomes the
/// vertex gadget copy at offset `x * (24g + 4)`; if `y` is the `i`-th
/// neighbour of `x` and `x` the `j`-th of `y` (adjacency order), `f_i` of
/// `x`'s copy is joined to `f_j` of `y`'s.
pub fn reduce_3col_to_star3(g: &Graph, girth_param: usize) -> Result<ReductionResult> {
    if g.max_degree() > 4 {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds 4",
            g.max_degree()
        )));
    }
    let gadget = star_vertex_gadget(girth_param)?;
    let GadgetObject::Graph(v) = &gadget.object else {
        return Err(Error::Internal("vertex gadget must be a graph".into()));
    };
    let size = v.n();
    let mut out = Graph::new(g.n() * size);
    for x in 0..g.n() {
        for &(a, b) in v.edges() {
            out.push_edge_unchecked(x * size + a, x * size + b);
        }
    }
    let slot = |x: usize, y: usize| g.neighbours(x).iter().position(|&w| w == y).expect("edge") + 1;
    for &(x, y) in g.edges() {
        let fx = x * size + star_vertex_f(girth_param, slot(x, y));
        let fy = y * size + star_vertex_f(girth_param, slot(y, x));
        out.push_edge_unchecked(fx, fy);
    }
    Ok(ReductionResult {
        name: "3col-to-star3",
        source: g.clone(),
        problem: SourceProblem::Colouring {
            property: PropertyKind::Proper,
            k: 3,
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Star,
        target_k: 3,
        forward: (0..g.n()).map(|x| (x * size..(x + 1) * size).collect()).collect(),
        back: BackTranslation::VertexRepresentative(
            (0..g.n()).map(|x| x * size + star_vertex_f(girth_param, 1)).collect(),
        ),
    })
}

/// Star 3-colouring to star `k`-colouring by adding a dominating clique on
/// `k - 3` new vertices.
pub fn reduce_star3_dominating_clique(g: &Graph, k: usize) -> Result<ReductionResult> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("needs k >= 3, got {k}")));
    }
    let out = add_dominating_clique(g, k - 3);
    Ok(ReductionResult {
        name: "star3-dominating-clique",
        source: g.clone(),
        problem: SourceProblem::Colouring {
            property: PropertyKind::Star,
            k: 3,
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Star,
        target_k: k,
        forward: (0..g.n()).map(|v| vec![v]).collect(),
        back: BackTranslation::Relabel {
            kept: (0..g.n()).collect(),
            deleted: Vec::new(),
        },
    })
}

/// Acyclic `k`-colouring to acyclic `k`-colouring of larger girth. A vertex
/// `z` of degree `d` becomes the chain `z_1..z_d` with a gadget copy
/// between consecutive chain vertices (`x1` on `z_i`, `x3` on `z_{i+1}`);
/// an edge `uv` becomes `u_i v_j` by neighbour positions.
///
/// Chain vertices come first, vertex by vertex; isolated vertices keep one
/// chain vertex. Gadget interiors follow in chain order.
///
/// Any `g` is accepted. The output is bipartite when `g` is bipartite and
/// the gadget is bipartite with `x1`, `x3` on the same side.
pub fn reduce_acyclic_vertexsplit(g: &Graph, gadget: &EqualityGadget) -> Result<ReductionResult> {
    let s = gadget.graph();
    let (x1, x3) = (gadget.x1(), gadget.x3());
    let inner: Vec<usize> = (0..s.n()).filter(|&v| v != x1 && v != x3).collect();
    let mut start = Vec::with_capacity(g.n());
    let mut total = 0;
    for z in 0..g.n() {
        start.push(total);
        total += g.degree(z).max(1);
    }
    let links: usize = (0..g.n()).map(|z| g.degree(z).saturating_sub(1)).sum();
    let mut out = Graph::new(total + links * inner.len());
    let mut forward: Vec<Vec<usize>> = Vec::with_capacity(g.n());
    let mut next = total;
    for z in 0..g.n() {
        let d = g.degree(z).max(1);
        let mut region: Vec<usize> = (start[z]..start[z] + d).collect();
        for i in 0..d - 1 {
            let (a, b) = (start[z] + i, start[z] + i + 1);
            let place = |w: usize| {
                if w == x1 {
                    a
                } else if w == x3 {
                    b
                } else {
                    next + inner.iter().position(|&x| x == w).expect("inner vertex")
                }
            };
            for &(p, q) in s.edges() {
                out.push_edge_unchecked(place(p), place(q));
            }
            region.extend(next..next + inner.len());
            next += inner.len();
        }
        forward.push(region);
    }
    let slot = |x: usize, y: usize| g.neighbours(x).iter().position(|&w| w == y).expect("edge");
    for &(u, v) in g.edges() {
        out.push_edge_unchecked(start[u] + slot(u, v), start[v] + slot(v, u));
    }
    Ok(ReductionResult {
        name: "acyclic-vertexsplit",
        source: g.clone(),
        problem: SourceProblem::Colouring {
            property: PropertyKind::Acyclic,
            k: gadget.k(),
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Acyclic,
        target_k: gadget.k(),
        forward,
        back: BackTranslation::VertexRepresentative(start),
    })
}

/// Injective `k`-colouring to injective `k`-colouring of a bipartite graph.
/// Edge `e = uv` (insertion order) is replaced by `u'_v = n + ek` on `u`,
/// `v'_u = n + ek + 1` on `v`, and `k - 2` vertices joined to both.
pub fn reduce_injective_bipartite(g: &Graph, k: usize) -> Result<ReductionResult> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("needs k >= 3, got {k}")));
    }
    let n = g.n();
    let mut out = Graph::new(n + g.m() * k);
    let mut forward: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (pu, pv) = (n + e * k, n + e * k + 1);
        out.push_edge_unchecked(u, pu);
        out.push_edge_unchecked(v, pv);
        for mid in n + e * k + 2..n + (e + 1) * k {
            out.push_edge_unchecked(pu, mid);
            out.push_edge_unchecked(pv, mid);
        }
        forward[u].push(pu);
        forward[v].push(pv);
    }
    if !out.is_bipartite() {
        return Err(Error::Internal("edge-gadget output is not bipartite".into()));
    }
    Ok(ReductionResult {
        name: "injective-bipartite",
        source: g.clone(),
        problem: SourceProblem::Colouring {
            property: PropertyKind::Injective,
            k,
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Injective,
        target_k: k,
        forward,
        back: BackTranslation::VertexRepresentative((0..n).collect()),
    })
}

/// Checks that `cover` partitions the vertices of `g` into cliques.
fn validate_cover(g: &Graph, cover: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, part) in cover.iter().enumerate() {
        for &v in part {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if owner[v] != usize::MAX {
                return Err(Error::Precondition(format!("vertex {v} is covered twice")));
            }
            owner[v] = i;
        }
        for (a, &u) in part.iter().enumerate() {
            for &w in &part[a + 1..] {
                if !g.has_edge(u, w) {
                    return Err(Error::Precondition(format!(
                        "cover part {i} is not a clique: {u} and {w} are non-adjacent"
                    )));
                }
            }
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::Precondition(format!("vertex {v} is not covered")));
    }
    Ok(owner)
}

/// Colouring of a graph covered by three cliques to injective colouring.
///
/// Vertices without a neighbour outside their clique are deleted until none
/// remain; they can be coloured greedily afterwards. Each remaining cross
/// edge `xy` is replaced by a vertex `v_e` adjacent to `x` and `y`, and the
/// `v_e` form a clique. Kept vertices come first (ascending), then the
/// `v_e` in edge order. `k' = k + |E*|`.
pub fn reduce_colouring_to_injective_5p1(
    g: &Graph,
    cover: &[Vec<usize>],
    k: usize,
) -> Result<ReductionResult> {
    if cover.len() > 3 {
        return Err(Error::Precondition(format!(
            "cover has {} cliques, at most 3 allowed",
            cover.len()
        )));
    }
    let owner = validate_cover(g, cover)?;
    let largest = cover.iter().map(Vec::len).max().unwrap_or(0);
    if k < largest {
        return Err(Error::TrivialNo(format!(
            "a clique of size {largest} needs more than {k} colours"
        )));
    }
    let mut alive = vec![true; g.n()];
    let mut deleted = Vec::new();
    loop {
        let lonely = (0..g.n()).find(|&v| {
            alive[v]
                && g.neighbours(v)
                    .iter()
                    .all(|&w| !alive[w] || owner[w] == owner[v])
        });
        match lonely {
            Some(v) => {
                alive[v] = false;
                deleted.push(v);
            }
            None => break,
        }
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        local[v] = i;
    }
    let cross: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| alive[u] && alive[v] && owner[u] != owner[v])
        .collect();
    let r = kept.len();
    let mut out = Graph::new(r + cross.len());
    for &(u, v) in g.edges() {
        if alive[u] && alive[v] && owner[u] == owner[v] {
            out.push_edge_unchecked(local[u], local[v]);
        }
    }
    for (i, &(u, v)) in cross.iter().enumerate() {
        out.push_edge_unchecked(local[u], r + i);
        out.push_edge_unchecked(local[v], r + i);
    }
    for i in 0..cross.len() {
        for j in i + 1..cross.len() {
            out.push_edge_unchecked(r + i, r + j);
        }
    }
    let mut forward: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &v in &kept {
        forward[v].push(local[v]);
    }
    for (i, &(u, v)) in cross.iter().enumerate() {
        forward[u].push(r + i);
        forward[v].push(r + i);
    }
    Ok(ReductionResult {
        name: "colouring-to-injective-5p1",
        source: g.clone(),
        problem: SourceProblem::Colouring {
            property: PropertyKind::Proper,
            k,
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Injective,
        target_k: k + cross.len(),
        forward,
        back: BackTranslation::Relabel { kept, deleted },
    })
}

/// List colouring to colouring. Colours are `0..k` with `k` one more than
/// the largest listed colour; palette vertex `n + l` is joined to every
/// vertex whose list lacks `l`, and the palette is a clique.
pub fn reduce_listcol_to_colouring(g: &Graph, lists: &[Vec<usize>]) -> Result<ReductionResult> {
    if lists.len() != g.n() {
        return Err(Error::Precondition(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if let Some(v) = lists.iter().position(Vec::is_empty) {
        return Err(Error::Precondition(format!("vertex {v} has an empty list")));
    }
    let k = lists.iter().flatten().max().map_or(0, |&m| m + 1);
    let n = g.n();
    let mut out = Graph::new(n + k);
    for &(u, v) in g.edges() {
        out.push_edge_unchecked(u, v);
    }
    for a in 0..k {
        for b in a + 1..k {
            out.push_edge_unchecked(n + a, n + b);
        }
    }
    for (u, list) in lists.iter().enumerate() {
        for l in 0..k {
            if !list.contains(&l) {
                out.push_edge_unchecked(u, n + l);
            }
        }
    }
    Ok(ReductionResult {
        name: "listcol-to-colouring",
        source: g.clone(),
        problem: SourceProblem::ListColouring {
            lists: lists.to_vec(),
        },
        target: Instance::Graph(out),
        target_property: PropertyKind::Proper,
        target_k: k,
        forward: (0..n).map(|v| vec![v]).collect(),
        back: BackTranslation::ListRelabel {
            palette: (n..n + k).collect(),
        },
    })
}

/// Connected perfect matching in a balanced bipartite graph to acyclic
/// colouring of the complement with half as many colours as vertices.
pub fn reduce_connmatching_to_acyclic(g: &Graph, side: &[bool]) -> Result<ReductionResult> {
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
    let right = side.iter().filter(|&&s| s).count();
    if 2 * right != g.n() {
        return Err(Error::Precondition(format!(
            "sides have {} and {right} vertices",
            g.n() - right
        )));
    }
    Ok(ReductionResult {
        name: "connmatching-to-acyclic",
        source: g.clone(),
        problem: SourceProblem::ConnectedMatching {
            side: side.to_vec(),
        },
        target: Instance::Graph(complement(g)),
        target_property: PropertyKind::Acyclic,
        target_k: right,
        forward: (0..g.n()).map(|v| vec![v]).collect(),
        back: BackTranslation::ClassesToMatching,
    })
}
