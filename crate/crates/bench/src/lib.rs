//! Benchmark inputs shared by the criterion targets.

use hfree_core::graph::Graph;
use hfree_core::random::random_instance;
use hfree_core::recognize::ClassQuery;

/// Seeded members of `tag` on `n` vertices.
pub fn corpus(tag: &str, n: usize, count: u64) -> Vec<Graph> {
    let q: ClassQuery = tag.parse().expect("known class tag");
    (0..count)
        .map(|seed| random_instance(&q, n, seed).expect("class is sampleable"))
        .collect()
}
