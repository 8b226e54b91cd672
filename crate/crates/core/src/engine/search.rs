//! Backtracking core shared by decide, enumerate and the counterexample
//! searches. One [`Solver`] works on one connected graph.

use super::{Meter, VertexOrder};
use crate::colouring::PropertyKind;
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;

pub(crate) const NONE: usize = usize::MAX;

pub(crate) fn low_mask(x: usize) -> u128 {
    if x >= 128 {
        !0
    } else {
        (1u128 << x) - 1
    }
}

pub(crate) enum Step {
    Continue,
    Stop,
    Exhausted,
}

pub(crate) struct Solver<'a> {
    g: &'a Graph,
    p: PropertyKind,
    colour: Vec<usize>,
    domain: Vec<u128>,
    trail: Vec<(usize, u128)>,
    dist2: Vec<Vec<usize>>,
    order: Vec<usize>,
    symmetry: bool,
    rng: Option<ChaCha8Rng>,
    meter: &'a Meter,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    /// Builds the solver and applies the precolouring. Returns `None` when
    /// the precolouring already violates `p`.
    pub(crate) fn new(
        g: &'a Graph,
        k: usize,
        p: PropertyKind,
        fixed: &[(usize, usize)],
        order: VertexOrder,
        symmetry: bool,
        rng: Option<ChaCha8Rng>,
        meter: &'a Meter,
    ) -> Option<Self> {
        let n = g.n();
        let dist2 = if p == PropertyKind::Injective {
            distance_two(g)
        } else {
            Vec::new()
        };
        let mut s = Solver {
            g,
            p,
            colour: vec![NONE; n],
            domain: vec![low_mask(k); n],
            trail: Vec::new(),
            dist2,
            order: Vec::new(),
            symmetry: symmetry && fixed.is_empty(),
            rng,
            meter,
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::new(),
        };
        for &(v, c) in fixed {
            if s.colour[v] != NONE {
                if s.colour[v] != c {
                    return None;
                }
                continue;
            }
            if s.domain[v] >> c & 1 == 0 || !s.assign(v, c) {
                return None;
            }
        }
        s.order = vertex_order(g, &s.colour, order);
        Some(s)
    }

    pub(crate) fn run(
        &mut self,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Step {
        self.search(0, 0, visit)
    }

    fn search(
        &mut self,
        depth: usize,
        used: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Step {
        if depth == self.order.len() {
            return match visit(&self.colour) {
                ControlFlow::Continue(()) => Step::Continue,
                ControlFlow::Break(()) => Step::Stop,
            };
        }
        let v = self.order[depth];
        let mut cands = self.domain[v];
        if self.symmetry {
            cands &= low_mask(used + 1);
        }
        let mut list: Vec<usize> = Vec::with_capacity(cands.count_ones() as usize);
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            list.push(c);
            cands &= cands - 1;
        }
        if let Some(rng) = self.rng.as_mut() {
            list.shuffle(rng);
        }
        for c in list {
            if !self.meter.tick() {
                return Step::Exhausted;
            }
            let mark = self.trail.len();
            if self.assign(v, c) {
                let next = if self.symmetry { used.max(c + 1) } else { used };
                match self.search(depth + 1, next, visit) {
                    Step::Continue => {}
                    other => {
                        self.undo(v, mark);
                        return other;
                    }
                }
            }
            self.undo(v, mark);
        }
        Step::Continue
    }

    fn undo(&mut self, v: usize, mark: usize) {
        while self.trail.len() > mark {
            let (u, d) = self.trail.pop().unwrap();
            self.domain[u] = d;
        }
        self.colour[v] = NONE;
    }

    /// Removes colour `c` from the domain of uncoloured `u`; false on wipe-out.
    #[inline]
    fn remove(&mut self, u: usize, c: usize) -> bool {
        let bit = 1u128 << c;
        if self.domain[u] & bit != 0 {
            self.trail.push((u, self.domain[u]));
            self.domain[u] &= !bit;
            if self.domain[u] == 0 {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        if g.neighbours(v).iter().any(|&u| self.colour[u] == c) {
            return false;
        }
        self.colour[v] = c;
        let ok = match self.p {
            PropertyKind::Proper => true,
            PropertyKind::Acyclic => self.acyclic_ok(v, c),
            PropertyKind::Star => self.star_step(v, c),
            PropertyKind::Injective => self.injective_step(v, c),
        };
        ok && self.forward_neighbours(v, c)
    }

    fn forward_neighbours(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        for &u in g.neighbours(v) {
            if self.colour[u] == NONE && !self.remove(u, c) {
                return false;
            }
        }
        true
    }

    fn injective_step(&mut self, v: usize, c: usize) -> bool {
        if self.dist2[v].iter().any(|&u| self.colour[u] == c) {
            return false;
        }
        for i in 0..self.dist2[v].len() {
            let u = self.dist2[v][i];
            if self.colour[u] == NONE && !self.remove(u, c) {
                return false;
            }
        }
        true
    }

    /// Rejects the assignment if a two-coloured cycle closes through `v`:
    /// two same-coloured neighbours of `v` already joined by a path in the
    /// union of their class and `c`'s class.
    fn acyclic_ok(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        let nb = g.neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            let d = self.colour[a];
            if d == NONE {
                continue;
            }
            // only handle each colour group once, from its first member
            if nb[..i].iter().any(|&x| self.colour[x] == d) {
                continue;
            }
            let group: Vec<usize> = nb[i..]
                .iter()
                .copied()
                .filter(|&x| self.colour[x] == d)
                .collect();
            if group.len() < 2 {
                continue;
            }
            if self.epoch > u32::MAX - 1024 {
                self.stamp.iter_mut().for_each(|s| *s = 0);
                self.epoch = 0;
            }
            let base = self.epoch + 1;
            for &start in &group {
                if self.stamp[start] >= base {
                    // reached from an earlier member of the group
                    return false;
                }
                self.epoch += 1;
                self.flood(start, v, c, d, self.epoch);
            }
        }
        true
    }

    /// Marks the component of `start` in the `{c, d}`-coloured subgraph,
    /// skipping `skip`.
    fn flood(&mut self, start: usize, skip: usize, c: usize, d: usize, e: u32) {
        let g = self.g;
        self.queue.clear();
        self.queue.push(start);
        self.stamp[start] = e;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &y in g.neighbours(x) {
                if y == skip || self.stamp[y] == e {
                    continue;
                }
                let cy = self.colour[y];
                if cy == c || cy == d {
                    self.stamp[y] = e;
                    self.queue.push(y);
                }
            }
        }
    }

    /// Star propagation. Every two-coloured path on three vertices that the
    /// assignment creates forbids the middle colour around both ends; an
    /// already coloured vertex there would complete a two-coloured P4.
    fn star_step(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        for &x in g.neighbours(v) {
            let d = self.colour[x];
            if d == NONE {
                continue;
            }
            for &y in g.neighbours(x) {
                if y != v && self.colour[y] == c {
                    if !self.forbid_around(v, x, d) || !self.forbid_around(y, x, d) {
                        return false;
                    }
                }
            }
        }
        let nb = g.neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            let d = self.colour[a];
            if d == NONE {
                continue;
            }
            let twin = nb
                .iter()
                .enumerate()
                .any(|(j, &b)| j != i && self.colour[b] == d);
            if twin && !self.forbid_around(a, v, c) {
                return false;
            }
        }
        true
    }

    fn forbid_around(&mut self, end: usize, mid: usize, f: usize) -> bool {
        let g = self.g;
        for &w in g.neighbours(end) {
            if w == mid {
                continue;
            }
            let cw = self.colour[w];
            if cw == f {
                return false;
            }
            if cw == NONE && !self.remove(w, f) {
                return false;
            }
        }
        true
    }
}

/// Vertices at distance exactly two, for each vertex.
pub(crate) fn distance_two(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = vec![Vec::new(); n];
    let mut mark = vec![usize::MAX; n];
    for v in 0..n {
        mark[v] = v;
        for &u in g.neighbours(v) {
            mark[u] = v;
        }
        for &u in g.neighbours(v) {
            for &w in g.neighbours(u) {
                if mark[w] != v {
                    mark[w] = v;
                    out[v].push(w);
                }
            }
        }
    }
    out
}

/// Static search order over the uncoloured vertices.
fn vertex_order(g: &Graph, colour: &[usize], order: VertexOrder) -> Vec<usize> {
    let free: Vec<usize> = (0..g.n()).filter(|&v| colour[v] == NONE).collect();
    match order {
        VertexOrder::DegreeDescending => {
            let mut o = free;
            o.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            o
        }
        VertexOrder::Connected => {
            let n = g.n();
            let mut placed: Vec<bool> = colour.iter().map(|&c| c != NONE).collect();
            let mut score = vec![0usize; n];
            for v in 0..n {
                if placed[v] {
                    for &u in g.neighbours(v) {
                        score[u] += 1;
                    }
                }
            }
            let mut o = Vec::with_capacity(free.len());
            for _ in 0..free.len() {
                let v = free
                    .iter()
                    .copied()
                    .filter(|&v| !placed[v])
                    .max_by_key(|&v| (score[v], g.degree(v), std::cmp::Reverse(v)))
                    .unwrap();
                placed[v] = true;
                o.push(v);
                for &u in g.neighbours(v) {
                    score[u] += 1;
                }
            }
            o
        }
    }
}
