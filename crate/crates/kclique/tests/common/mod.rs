//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each test binary uses a different subset

use kclique::gen;
use kclique::graph::Graph;

/// The K6-minus-one-edge graph (missing edge {2,3}): two 5-cliques, no
/// 6-clique.
pub fn k6_minus_edge() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in (u + 1)..6 {
            if (u, v) != (2, 3) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, &edges)
}

/// 200 random graphs with n in [5, 24], p cycling through {0.1, ..., 0.9},
/// fixed seeds.
pub fn corpus() -> Vec<Graph> {
    (0..200u64)
        .map(|i| {
            let n = 5 + (i as usize % 20);
            let p = 0.1 + 0.1 * (i % 9) as f64;
            gen::gnp(n, p, 1000 + i)
        })
        .collect()
}

/// Deterministic collaboration-style graph with at least 1e5 edges: planted
/// overlapping cliques plus noise edges.
pub fn mid_size_graph() -> Graph {
    gen::planted_cliques(30_000, 3000, 6, 11, 30_000, 99)
}

pub fn single_thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
}

pub fn pool_with(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("pool")
}
