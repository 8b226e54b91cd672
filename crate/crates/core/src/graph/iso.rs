use super::Graph;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Largest pattern accepted by [`induced_subgraph_find`] and
/// [`is_isomorphic`].
pub const DEFAULT_PATTERN_BOUND: usize = 8;

/// Lexicographically first induced embedding of `h` into `g`.
///
/// The result maps vertex `i` of `h` to `embedding[i]` in `g`; adjacency and
/// non-adjacency are both preserved. Patterns above
/// [`DEFAULT_PATTERN_BOUND`] vertices are rejected.
pub fn induced_subgraph_find(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if h.n() > DEFAULT_PATTERN_BOUND {
        return Err(Error::PatternTooLarge {
            size: h.n(),
            bound: DEFAULT_PATTERN_BOUND,
        });
    }
    Ok(find_induced(g, h))
}

pub(crate) fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let ga = g.adjacency_matrix();
    let ha = h.adjacency_matrix();
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];

    fn extend(
        ga: &[Vec<bool>],
        ha: &[Vec<bool>],
        hdeg: &[usize],
        gdeg: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == ha.len() {
            return true;
        }
        for x in 0..ga.len() {
            if used[x] || gdeg[x] < hdeg[i] {
                continue;
            }
            if map.iter().enumerate().all(|(j, &y)| ga[x][y] == ha[i][j]) {
                used[x] = true;
                map.push(x);
                if extend(ga, ha, hdeg, gdeg, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }

    let hdeg: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let gdeg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    extend(&ga, &ha, &hdeg, &gdeg, &mut map, &mut used).then_some(map)
}

/// Exact isomorphism test for graphs up to [`DEFAULT_PATTERN_BOUND`]
/// vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > DEFAULT_PATTERN_BOUND {
            return Err(Error::PatternTooLarge {
                size: x.n(),
                bound: DEFAULT_PATTERN_BOUND,
            });
        }
    }
    Ok(isomorphic_unbounded(g, h))
}

/// Permutation search with degree pruning and no size bound. Only sensible
/// on small or very regular-free inputs.
pub(crate) fn isomorphic_unbounded(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || degree_sequence(g) != degree_sequence(h) {
        return false;
    }
    // same vertex count and edge count: an induced embedding is an isomorphism
    find_induced(h, g).is_some()
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Smallest upper-triangle bitmask over all vertex permutations; equal iff
/// isomorphic. Limited to [`DEFAULT_PATTERN_BOUND`] vertices.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > DEFAULT_PATTERN_BOUND {
        return Err(Error::PatternTooLarge {
            size: n,
            bound: DEFAULT_PATTERN_BOUND,
        });
    }
    let adj = g.adjacency_matrix();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if adj[perm[u]][perm[v]] {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (`n <= 7`), in order of first appearance by edge bitmask.
pub fn small_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::PatternTooLarge { size: n, bound: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = Graph::new(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.push_edge_unchecked(u, v);
            }
        }
        let key = (g.m(), degree_sequence(&g));
        let bucket = classes.entry(key).or_default();
        if bucket.iter().any(|&r| isomorphic_unbounded(&reps[r], &g)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(g);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::named;
    use crate::graph::complement;

    #[test]
    fn induced_examples() {
        assert!(induced_subgraph_find(&named("C5"), &named("P4")).unwrap().is_some());
        assert_eq!(induced_subgraph_find(&named("P4"), &named("2P2")).unwrap(), None);
        assert_eq!(induced_subgraph_find(&named("K4"), &named("K13")).unwrap(), None);
        // the spine of P4 is not an induced subgraph of C4
        assert_eq!(induced_subgraph_find(&named("C4"), &named("P4")).unwrap(), None);
        assert!(matches!(
            induced_subgraph_find(&named("K_10"), &named("P9")),
            Err(Error::PatternTooLarge { size: 9, bound: 8 })
        ));
    }

    #[test]
    fn embedding_is_lexicographically_first() {
        assert_eq!(
            induced_subgraph_find(&named("C5"), &named("P4")).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(
            induced_subgraph_find(&named("P5"), &named("2P1")).unwrap(),
            Some(vec![0, 2])
        );
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&named("C4"), &named("K22")).unwrap());
        assert!(!is_isomorphic(&named("P4"), &named("K13")).unwrap());
        assert!(is_isomorphic(&complement(&named("P4")), &named("P4")).unwrap());
        assert!(!is_isomorphic(&named("C6"), &named("2K3")).unwrap());
        assert!(is_isomorphic(&named("K_9"), &named("K_9")).is_err());
    }

    #[test]
    fn canonical_form_separates_classes() {
        let a = canonical_form(&named("C4")).unwrap();
        let b = canonical_form(&named("K22")).unwrap();
        let c = canonical_form(&named("P4")).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn counts_of_unlabelled_graphs() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| small_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_graph(n: usize, bits: &[bool]) -> Graph {
            let mut g = Graph::new(n);
            let mut it = bits.iter();
            for u in 0..n {
                for v in u + 1..n {
                    if *it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        }

        /// Exhaustive oracle: every ordered |V(h)|-tuple of distinct vertices.
        fn brute_force_contains(g: &Graph, h: &Graph) -> bool {
            let k = h.n();
            let mut tuple = Vec::new();
            fn rec(g: &Graph, h: &Graph, k: usize, t: &mut Vec<usize>) -> bool {
                if t.len() == k {
                    return (0..k).all(|i| {
                        (0..k).all(|j| i == j || g.has_edge(t[i], t[j]) == h.has_edge(i, j))
                    });
                }
                for x in 0..g.n() {
                    if !t.contains(&x) {
                        t.push(x);
                        if rec(g, h, k, t) {
                            return true;
                        }
                        t.pop();
                    }
                }
                false
            }
            rec(g, h, k, &mut tuple)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn agrees_with_exhaustive_enumeration(
                n in 1usize..=10,
                gbits in proptest::collection::vec(any::<bool>(), 45),
                hn in 1usize..=4,
                hbits in proptest::collection::vec(any::<bool>(), 6),
            ) {
                let g = random_graph(n, &gbits);
                let h = random_graph(hn, &hbits);
                let found = induced_subgraph_find(&g, &h).unwrap();
                if let Some(ref map) = found {
                    for i in 0..hn {
                        for j in 0..hn {
                            if i != j {
                                prop_assert_eq!(g.has_edge(map[i], map[j]), h.has_edge(i, j));
                            }
                        }
                    }
                }
                prop_assert_eq!(found.is_some(), brute_force_contains(&g, &h));
            }

            #[test]
            fn relabelling_preserves_isomorphism(
                n in 1usize..=8,
                bits in proptest::collection::vec(any::<bool>(), 28),
                seed in any::<u64>(),
            ) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let g = random_graph(n, &bits);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
                let mut h = Graph::new(n);
                for &(u, v) in g.edges() {
                    h.add_edge(perm[u], perm[v]).unwrap();
                }
                prop_assert!(is_isomorphic(&g, &h).unwrap());
                prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            }
        }
    }
}
