use crate::colouring::{Colouring, PropertyKind};
use crate::engine::{decide, enumerate, Decision, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{subdivide, Graph};
use std::collections::VecDeque;
use std::ops::ControlFlow;

/// A graph with two vertices `x1`, `x3` that every acyclic `k`-colouring
/// colours alike, with a bichromatic `x1`-`x3` path for every other colour.
///
/// Only obtainable through [`EqualityGadget::verify`] or
/// [`acyclic_equality_gadget`], so holding one means the claims were checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityGadget {
    graph: Graph,
    x1: usize,
    x3: usize,
    k: usize,
    removed: Vec<usize>,
}

impl EqualityGadget {
    pub fn verify(s: Graph, x1: usize, x3: usize, k: usize, b: &SearchBudget) -> Result<Self> {
        if !verify_equality_gadget(&s, x1, x3, k, b)? {
            return Err(Error::Precondition(format!(
                "vertices {x1} and {x3} do not form an equality gadget for k = {k}"
            )));
        }
        Ok(EqualityGadget {
            graph: s,
            x1,
            x3,
            k,
            removed: Vec::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn x1(&self) -> usize {
        self.x1
    }

    pub fn x3(&self) -> usize {
        self.x3
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Subdivision vertices deleted during construction, in order, indexed
    /// in the full subdivision. Empty for hand-supplied gadgets.
    pub fn removed(&self) -> &[usize] {
        &self.removed
    }
}

/// Is there an `x1`-`x3` path using only colours `a` and `b`?
fn path_in_classes(g: &Graph, c: &Colouring, x1: usize, x3: usize, a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.n()];
    seen[x1] = true;
    let mut queue = VecDeque::from([x1]);
    while let Some(x) = queue.pop_front() {
        if x == x3 {
            return true;
        }
        for &y in g.neighbours(x) {
            let cy = c.get(y);
            if !seen[y] && (cy == a || cy == b) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

/// True iff `s` is acyclically `k`-colourable, every such colouring gives
/// `x1` and `x3` one colour `a`, and for every colour `i != a` below `k`
/// an `{a, i}`-coloured path joins them.
pub fn verify_equality_gadget(
    s: &Graph,
    x1: usize,
    x3: usize,
    k: usize,
    b: &SearchBudget,
) -> Result<bool> {
    for v in [x1, x3] {
        if v >= s.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: s.n() });
        }
    }
    let mut any = false;
    let mut ok = true;
    enumerate(s, k, PropertyKind::Acyclic, b, |c| {
        any = true;
        let a = c.get(x1);
        let good = c.get(x3) == a
            && (0..k)
                .filter(|&i| i != a)
                .all(|i| path_in_classes(s, c, x1, x3, a, i));
        if good {
            ControlFlow::Continue(())
        } else {
            ok = false;
            ControlFlow::Break(())
        }
    })?;
    Ok(any && ok)
}

/// Builds the equality gadget from `f`: subdivide every edge, then delete
/// subdivision vertices in ascending order until the rest is acyclically
/// `k`-colourable. The last deleted vertex `x2` names `x1`, `x3` (its two
/// neighbours).
///
/// Unless `trust_f`, `f` is first checked to have no proper
/// `2k(k-1)`-colouring. The result is verified before it is returned.
pub fn acyclic_equality_gadget(
    f: &Graph,
    k: usize,
    trust_f: bool,
    b: &SearchBudget,
) -> Result<EqualityGadget> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("equality gadget needs k >= 2, got {k}")));
    }
    let bound = 2 * k * (k - 1);
    if !trust_f {
        match decide(f, bound, PropertyKind::Proper, b)? {
            Decision::Yes(_) => {
                return Err(Error::Precondition(format!(
                    "F is properly {bound}-colourable, so its subdivision is acyclically {k}-colourable"
                )))
            }
            Decision::Exhausted => return Err(Error::BudgetExhausted),
            Decision::No => {}
        }
    }
    let s = subdivide(f);
    let n = f.n();
    let mut removed = Vec::new();
    for x2 in n..s.n() {
        removed.push(x2);
        let (rest, kept) = s.without(&removed);
        match decide(&rest, k, PropertyKind::Acyclic, b)? {
            Decision::No => continue,
            Decision::Exhausted => return Err(Error::BudgetExhausted),
            Decision::Yes(_) => {
                let (x1, x3) = (s.neighbours(x2)[0], s.neighbours(x2)[1]);
                let local = |v: usize| kept.iter().position(|&w| w == v).expect("old vertex kept");
                let mut gadget = EqualityGadget::verify(rest, local(x1), local(x3), k, b)
                    .map_err(|e| match e {
                        Error::Precondition(m) => Error::Internal(m),
                        other => other,
                    })?;
                gadget.removed = removed;
                return Ok(gadget);
            }
        }
    }
    Err(Error::Internal(
        "deleting every subdivision vertex never gave an acyclically colourable graph".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degeneracy, named};

    fn ub() -> SearchBudget {
        SearchBudget::unlimited()
    }

    #[test]
    fn small_candidates() {
        let p3 = named("P3");
        assert!(verify_equality_gadget(&p3, 0, 2, 2, &ub()).unwrap());
        assert!(!verify_equality_gadget(&p3, 0, 2, 3, &ub()).unwrap());
        assert!(!verify_equality_gadget(&named("P2"), 0, 1, 3, &ub()).unwrap());
        assert!(!verify_equality_gadget(&named("C4"), 0, 2, 3, &ub()).unwrap());
        assert!(EqualityGadget::verify(named("P2"), 0, 1, 3, &ub()).is_err());
    }

    #[test]
    fn colourable_f_is_refused() {
        let e = acyclic_equality_gadget(&named("C5"), 3, false, &ub()).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
    }

    #[test]
    fn complete_graph_gadget_for_two_colours() {
        let g = acyclic_equality_gadget(&named("K5"), 2, false, &ub()).unwrap();
        assert_eq!(g.removed().len(), 8);
        assert_eq!((g.x1(), g.x3()), (2, 3));
        assert_eq!(g.graph().n(), 5 + 10 - 8);
        assert!(g.graph().is_bipartite());
        assert!(degeneracy(g.graph()) <= 2);
    }
}
