//! Exact oracles: decision, optimisation and enumeration for the four
//! colouring disciplines, plus matching oracles.
//!
//! The search colours vertices in a static order, tries colours in
//! ascending order and, unless vertices are precoloured, only ever opens
//! the smallest unused colour. Domains are bitmasks, so at most
//! [`MAX_COLOURS`] colours are supported. Every yes-answer is passed
//! through [`crate::verify`] before it is returned.

mod matching;
mod search;

pub use matching::{has_connected_matching_n, max_matching, Matching};

use crate::colouring::{Colouring, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::verify;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use search::{Solver, Step};
use std::collections::VecDeque;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

pub const MAX_COLOURS: usize = 128;

/// Limits for one solver call. Exceeding a limit yields
/// [`Decision::Exhausted`] or [`Error::BudgetExhausted`], never a wrong
/// answer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Shuffles the colour order at every node, deterministically.
    pub seed: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            node_limit: Some(limit),
            ..Self::default()
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VertexOrder {
    /// Descending degree, ties by index.
    #[default]
    DegreeDescending,
    /// Each next vertex has the most already placed neighbours (ties by
    /// degree, then index). Keeps the search local on sparse gadgets.
    Connected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(Colouring),
    No,
    Exhausted,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn colouring(&self) -> Option<&Colouring> {
        match self {
            Decision::Yes(c) => Some(c),
            _ => None,
        }
    }
}

/// Node counter shared by every solver spawned for one call.
pub(crate) struct Meter {
    nodes: AtomicU64,
    limit: u64,
    deadline: Option<Instant>,
    tripped: AtomicBool,
}

impl Meter {
    fn new(b: &SearchBudget) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            limit: b.node_limit.unwrap_or(u64::MAX),
            deadline: b.time_limit.map(|d| Instant::now() + d),
            tripped: AtomicBool::new(false),
        }
    }

    #[inline]
    pub(crate) fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.limit || self.tripped.load(Ordering::Relaxed) {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        if n & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.tripped.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    fn used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.limit)
    }
}

/// Configurable search over one graph. The free functions of this module
/// are thin wrappers around it.
#[derive(Clone, Debug)]
pub struct Search<'g> {
    g: &'g Graph,
    k: usize,
    p: PropertyKind,
    budget: SearchBudget,
    order: VertexOrder,
    fixed: Vec<(usize, usize)>,
}

impl<'g> Search<'g> {
    pub fn new(g: &'g Graph, k: usize, p: PropertyKind) -> Self {
        Search {
            g,
            k,
            p,
            budget: SearchBudget::default(),
            order: VertexOrder::default(),
            fixed: Vec::new(),
        }
    }

    pub fn budget(mut self, b: SearchBudget) -> Self {
        self.budget = b;
        self
    }

    pub fn order(mut self, o: VertexOrder) -> Self {
        self.order = o;
        self
    }

    /// Precolours `v` with `c`. Disables symmetry breaking.
    pub fn fix(mut self, v: usize, c: usize) -> Self {
        self.fixed.push((v, c));
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.g.n();
        for &(v, c) in &self.fixed {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if c >= self.k {
                return Err(Error::InvalidParameter(format!(
                    "precolour {c} of vertex {v} is not below k = {}",
                    self.k
                )));
            }
        }
        Ok(())
    }

    /// Number of usable colours on a graph with `n` vertices: more than
    /// `n` (or than the largest precolour) never helps.
    fn effective_k(&self, n: usize, fixed: &[(usize, usize)]) -> Result<usize> {
        let top = fixed.iter().map(|&(_, c)| c + 1).max().unwrap_or(0);
        let k = self.k.min(n.max(top));
        if k > MAX_COLOURS {
            return Err(Error::TooManyColours(k));
        }
        Ok(k)
    }

    fn rng(&self, salt: u64) -> Option<ChaCha8Rng> {
        self.budget
            .seed
            .map(|s| ChaCha8Rng::seed_from_u64(s ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
    }

    pub fn decide(&self) -> Result<Decision> {
        self.decide_counted().map(|(d, _)| d)
    }

    /// Decision plus the number of search nodes spent.
    pub fn decide_counted(&self) -> Result<(Decision, u64)> {
        self.validate()?;
        let meter = Meter::new(&self.budget);
        let d = self.decide_with(&meter)?;
        Ok((d, meter.used()))
    }

    fn decide_with(&self, meter: &Meter) -> Result<Decision> {
        let g = self.g;
        let mut colour = vec![0usize; g.n()];
        let mut exhausted = false;
        for (ci, comp) in g.components().into_iter().enumerate() {
            let (sub, fixed) = restrict(g, &comp, &self.fixed);
            let k = self.effective_k(sub.n(), &fixed)?;
            let Some(mut solver) = Solver::new(
                &sub,
                k,
                self.p,
                &fixed,
                self.order,
                true,
                self.rng(ci as u64),
                meter,
            ) else {
                return Ok(Decision::No);
            };
            let mut found = None;
            let step = solver.run(&mut |c: &[usize]| {
                found = Some(c.to_vec());
                ControlFlow::Break(())
            });
            match (step, found) {
                (_, Some(c)) => {
                    for (i, &v) in comp.iter().enumerate() {
                        colour[v] = c[i];
                    }
                }
                (Step::Exhausted, None) => exhausted = true,
                (_, None) => return Ok(Decision::No),
            }
        }
        if exhausted {
            return Ok(Decision::Exhausted);
        }
        let c = Colouring::new(colour);
        certify(g, &c, self.p)?;
        Ok(Decision::Yes(c))
    }

    /// Visits every valid colouring with colours below `k` exactly once, in
    /// the search order. Returns the number visited. Precolouring is honoured
    /// and no symmetry breaking is applied.
    pub fn enumerate(
        &self,
        mut visitor: impl FnMut(&Colouring) -> ControlFlow<()>,
    ) -> Result<u64> {
        self.validate()?;
        if self.k > MAX_COLOURS {
            return Err(Error::TooManyColours(self.k));
        }
        let meter = Meter::new(&self.budget);
        // a component without colourings empties the product; find out
        // cheaply before the joint search repeats that proof many times
        match self.decide_with(&meter)? {
            Decision::No => return Ok(0),
            Decision::Exhausted => return Err(Error::BudgetExhausted),
            Decision::Yes(_) => {}
        }
        let Some(mut solver) = Solver::new(
            self.g,
            self.k,
            self.p,
            &self.fixed,
            self.order,
            false,
            self.rng(u64::MAX),
            &meter,
        ) else {
            return Ok(0);
        };
        let mut count = 0u64;
        let step = solver.run(&mut |c: &[usize]| {
            count += 1;
            visitor(&Colouring::new(c.to_vec()))
        });
        match step {
            Step::Exhausted => Err(Error::BudgetExhausted),
            _ => Ok(count),
        }
    }
}

/// Subgraph induced by `comp` with the precolouring mapped into it.
fn restrict(g: &Graph, comp: &[usize], fixed: &[(usize, usize)]) -> (Graph, Vec<(usize, usize)>) {
    let sub = g.induced(comp);
    let local: Vec<(usize, usize)> = fixed
        .iter()
        .filter_map(|&(v, c)| comp.binary_search(&v).ok().map(|i| (i, c)))
        .collect();
    (sub, local)
}

fn certify(g: &Graph, c: &Colouring, p: PropertyKind) -> Result<()> {
    match verify(g, c, p)? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::Internal(format!(
            "search produced an invalid {p} colouring ({v})"
        ))),
    }
}

/// Is there a `p`-colouring of `g` with at most `k` colours?
pub fn decide(g: &Graph, k: usize, p: PropertyKind, b: &SearchBudget) -> Result<Decision> {
    Search::new(g, k, p).budget(b.clone()).decide()
}

/// Visits all valid `k`-colourings; see [`Search::enumerate`].
pub fn enumerate(
    g: &Graph,
    k: usize,
    p: PropertyKind,
    b: &SearchBudget,
    visitor: impl FnMut(&Colouring) -> ControlFlow<()>,
) -> Result<u64> {
    Search::new(g, k, p).budget(b.clone()).enumerate(visitor)
}

/// Lower bound used to start the ascending search on one component.
fn lower_bound(g: &Graph, p: PropertyKind) -> usize {
    let omega = g.clique_number();
    match p {
        PropertyKind::Injective => omega.max(g.max_degree() + 1).min(g.n()),
        _ => omega,
    }
}

/// Minimum number of colours of a `p`-colouring, with an optimal
/// colouring. Components are solved independently (in parallel) and
/// recombined; every constraint is local to a component.
pub fn chromatic(g: &Graph, p: PropertyKind, b: &SearchBudget) -> Result<(usize, Colouring)> {
    let meter = Meter::new(b);
    let comps = g.components();
    let solved: Vec<Result<(usize, Vec<usize>)>> = comps
        .par_iter()
        .map(|comp| {
            let sub = g.induced(comp);
            let mut k = lower_bound(&sub, p);
            loop {
                let s = Search::new(&sub, k, p).budget(b.clone());
                match s.decide_with(&meter)? {
                    Decision::Yes(c) => return Ok((k, c.0)),
                    Decision::No => k += 1,
                    Decision::Exhausted => return Err(Error::BudgetExhausted),
                }
            }
        })
        .collect();
    let mut colour = vec![0; g.n()];
    let mut best = 0;
    for (comp, r) in comps.iter().zip(solved) {
        let (k, c) = r?;
        best = best.max(k);
        for (i, &v) in comp.iter().enumerate() {
            colour[v] = c[i];
        }
    }
    Ok((best, Colouring::new(colour)))
}

/// Does every valid `k`-colouring give all of `s` one colour?
///
/// Searches for a counterexample pair: for each `s[i]`, a colouring with
/// `s[0]` coloured 0 and `s[i]` coloured 1. By renaming colours this covers
/// every colouring that separates the pair.
pub fn forced_equal(
    g: &Graph,
    k: usize,
    p: PropertyKind,
    s: &[usize],
    b: &SearchBudget,
) -> Result<bool> {
    forced_equal_counted(g, k, p, s, b).map(|(f, _)| f)
}

/// [`forced_equal`] plus the total number of search nodes spent.
pub fn forced_equal_counted(
    g: &Graph,
    k: usize,
    p: PropertyKind,
    s: &[usize],
    b: &SearchBudget,
) -> Result<(bool, u64)> {
    for &v in s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let meter = Meter::new(b);
    let base = Search::new(g, k, p).budget(b.clone()).order(VertexOrder::Connected);
    match base.decide_with(&meter)? {
        Decision::No => return Err(Error::NotColourable),
        Decision::Exhausted => return Err(Error::BudgetExhausted),
        Decision::Yes(_) => {}
    }
    let Some(&first) = s.first() else {
        return Ok((true, meter.used()));
    };
    if k < 2 {
        return Ok((true, meter.used()));
    }
    for &other in &s[1..] {
        if other == first {
            continue;
        }
        let probe = base.clone().fix(first, 0).fix(other, 1);
        match probe.decide_with(&meter)? {
            Decision::Yes(_) => return Ok((false, meter.used())),
            Decision::No => {}
            Decision::Exhausted => return Err(Error::BudgetExhausted),
        }
    }
    Ok((true, meter.used()))
}

/// Valid colourings found by randomised restarts: restart `i` shuffles the
/// colour order with seed `seed + i`. Duplicates are possible.
pub fn sample_colourings(
    g: &Graph,
    k: usize,
    p: PropertyKind,
    count: usize,
    seed: u64,
    per_restart: &SearchBudget,
) -> Result<Vec<Colouring>> {
    let mut out = Vec::with_capacity(count);
    let mut misses = 0;
    let mut i = 0u64;
    while out.len() < count {
        let b = per_restart.clone().with_seed(seed.wrapping_add(i));
        i += 1;
        match Search::new(g, k, p)
            .budget(b)
            .order(VertexOrder::Connected)
            .decide()?
        {
            Decision::Yes(c) => out.push(c),
            Decision::No => return Err(Error::NotColourable),
            Decision::Exhausted => {
                misses += 1;
                if misses > 16 && misses > out.len() {
                    return Err(Error::BudgetExhausted);
                }
            }
        }
    }
    Ok(out)
}

/// Is there a `u`-`v` path inside the union of two colour classes?
pub fn has_bichromatic_path(g: &Graph, c: &Colouring, u: usize, v: usize) -> Result<bool> {
    c.check_total(g.n())?;
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if u == v {
        return Ok(true);
    }
    let cu = c.get(u);
    let partners: Vec<usize> = if c.get(v) != cu {
        vec![c.get(v)]
    } else {
        (0..c.num_colours()).filter(|&d| d != cu).collect()
    };
    for d in partners {
        let mut seen = vec![false; g.n()];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(true);
            }
            for &y in g.neighbours(x) {
                let cy = c.get(y);
                if !seen[y] && (cy == cu || cy == d) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use PropertyKind::*;

    fn yes(g: &str, k: usize, p: PropertyKind) -> bool {
        decide(&named(g), k, p, &SearchBudget::unlimited())
            .unwrap()
            .is_yes()
    }

    fn chi(g: &str, p: PropertyKind) -> usize {
        chromatic(&named(g), p, &SearchBudget::unlimited()).unwrap().0
    }

    #[test]
    fn decide_examples() {
        assert!(!yes("C4", 2, Acyclic));
        assert!(yes("C4", 3, Acyclic));
        assert!(!yes("K33", 5, Injective));
        assert!(yes("K33", 6, Injective));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi("C5", Star), 4);
        assert_eq!(chi("C5", Injective), 5);
        assert_eq!(chi("3K3", Injective), 3);
        assert_eq!(chi("Petersen", Proper), 3);
        assert_eq!(chromatic(&Graph::new(0), Star, &SearchBudget::unlimited()).unwrap().0, 0);
    }

    #[test]
    fn enumerate_examples() {
        let count = |g: &str, k, p| {
            enumerate(&named(g), k, p, &SearchBudget::unlimited(), |_| ControlFlow::Continue(()))
                .unwrap()
        };
        assert_eq!(count("P2", 2, Proper), 2);
        assert_eq!(count("C3", 3, Injective), 6);
        assert_eq!(count("P4", 2, Star), 0);
        assert_eq!(count("2P1", 3, Proper), 9);
    }

    #[test]
    fn forced_equal_examples() {
        let b = SearchBudget::unlimited();
        let p3 = named("P3");
        assert!(forced_equal(&p3, 2, Proper, &[0, 2], &b).unwrap());
        assert!(!forced_equal(&p3, 3, Proper, &[0, 2], &b).unwrap());
        assert_eq!(
            forced_equal(&named("K3"), 2, Proper, &[0, 1], &b),
            Err(Error::NotColourable)
        );
    }

    #[test]
    fn bichromatic_paths() {
        let c = |v: &[usize]| Colouring::new(v.to_vec());
        assert!(has_bichromatic_path(&named("P3"), &c(&[0, 1, 0]), 0, 2).unwrap());
        assert!(!has_bichromatic_path(&named("2P1"), &c(&[0, 0]), 0, 1).unwrap());
        assert!(!has_bichromatic_path(&named("C6"), &c(&[0, 1, 2, 0, 1, 2]), 0, 3).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = named("Petersen");
        let d = decide(&g, 9, Injective, &SearchBudget::nodes(5)).unwrap();
        assert_eq!(d, Decision::Exhausted);
        assert_eq!(
            chromatic(&g, Injective, &SearchBudget::nodes(5)),
            Err(Error::BudgetExhausted)
        );
    }

    #[test]
    fn precolouring_is_respected() {
        let g = named("P4");
        let d = Search::new(&g, 3, Star).fix(0, 2).fix(3, 2).decide().unwrap();
        let c = d.colouring().unwrap();
        assert_eq!((c.get(0), c.get(3)), (2, 2));
        assert!(!Search::new(&g, 2, Proper).fix(0, 0).fix(1, 0).decide().unwrap().is_yes());
    }

    #[test]
    fn seeded_search_is_deterministic_and_valid() {
        let g = named("C9");
        let run = |s| {
            Search::new(&g, 3, Star)
                .budget(SearchBudget::unlimited().with_seed(s))
                .decide()
                .unwrap()
        };
        assert_eq!(run(7), run(7));
        let samples =
            sample_colourings(&g, 4, Star, 20, 1, &SearchBudget::nodes(100_000)).unwrap();
        for c in samples {
            assert!(verify(&g, &c, Star).unwrap().is_ok());
        }
    }
}
