use super::Graph;
use crate::error::{Error, Result};

/// Loopless multigraph. Edge `i` of [`Multigraph::edges`] has id `i`, so ids
/// are always dense `0..m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Adds one edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Adds `multiplicity` parallel copies of `uv`, returning their ids.
    pub fn add_bundle(&mut self, u: usize, v: usize, multiplicity: usize) -> Result<Vec<usize>> {
        (0..multiplicity).map(|_| self.add_edge(u, v)).collect()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Number of parallel edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    /// Edge ids incident to each vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(id);
            inc[v].push(id);
        }
        inc
    }
}

impl From<&Graph> for Multigraph {
    /// Edge ids follow the graph's insertion order.
    fn from(g: &Graph) -> Self {
        Multigraph {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundles_get_dense_ids() {
        let mut m = Multigraph::new(3);
        assert_eq!(m.add_edge(0, 1).unwrap(), 0);
        assert_eq!(m.add_bundle(1, 2, 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(m.multiplicity(2, 1), 3);
        assert_eq!(m.degree(1), 4);
        assert_eq!(m.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert_eq!(m.incidence()[0], vec![0]);
    }
}
