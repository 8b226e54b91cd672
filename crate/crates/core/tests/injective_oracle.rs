mod common;

use hfree_core::engine::{chromatic, SearchBudget};
use hfree_core::graph::{named, Graph};
use hfree_core::injective::{
    injective_2p1p3free, injective_3p1p2free, injective_4p1free, injective_p1p4free,
    optimal_2injective, Solution,
};
use hfree_core::random::random_instance;
use hfree_core::recognize::ClassQuery;
use common::{brute_force_2injective, random_graph};
use hfree_core::{verify, PropertyKind, Result};

fn exact(g: &Graph) -> usize {
    chromatic(g, PropertyKind::Injective, &SearchBudget::unlimited())
        .unwrap()
        .0
}

fn check_class(tag: &str, algo: fn(&Graph) -> Result<Solution>, instances: u64) {
    let q: ClassQuery = tag.parse().unwrap();
    for seed in 0..instances {
        let n = 4 + (seed % 7) as usize;
        let g = random_instance(&q, n, seed).unwrap();
        let (k, c) = algo(&g).unwrap();
        assert!(verify(&g, &c, PropertyKind::Injective).unwrap().is_ok());
        assert_eq!(k, exact(&g), "{tag} seed {seed}: {:?}", g.edges());
        // colours are reused across components, so bound classes per component
        for comp in g.components() {
            let local: Vec<usize> = comp.iter().map(|&v| c.get(v)).collect();
            for &x in &local {
                assert!(local.iter().filter(|&&y| y == x).count() <= 3);
            }
        }
    }
}

#[test]
fn p1p4free_matches_exact() {
    check_class("P1+P4-free", injective_p1p4free, 200);
}

#[test]
fn four_p1_free_matches_exact() {
    check_class("4P1-free", injective_4p1free, 200);
}

#[test]
fn two_p1_p3_free_matches_exact() {
    check_class("2P1+P3-free", injective_2p1p3free, 200);
}

#[test]
fn three_p1_p2_free_matches_exact() {
    check_class("3P1+P2-free", injective_3p1p2free, 200);
}

#[test]
fn two_injective_matches_brute_force() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        let (k, c) = optimal_2injective(&g);
        assert_eq!(k, brute_force_2injective(&g), "{:?}", g.edges());
        assert!(c.classes().iter().all(|cl| cl.len() <= 2));
        // μ + (n − 2μ) with μ the number of size-two classes
        let mu = c.classes().iter().filter(|cl| cl.len() == 2).count();
        assert_eq!(k, mu + (n - 2 * mu));
    }
}

#[test]
fn components_are_combined_by_maximum() {
    for (a, b) in [("C5", "K3"), ("P4", "P3"), ("K13", "2P2")] {
        let g = named(a).disjoint_union(&named(b));
        let expect = exact(&named(a)).max(exact(&named(b)));
        assert_eq!(exact(&g), expect);
        if let Ok((k, _)) = injective_3p1p2free(&g) {
            assert_eq!(k, expect);
        }
    }
}
