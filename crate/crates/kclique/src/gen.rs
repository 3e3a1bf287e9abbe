//! Deterministic graph generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexOrder};

/// Erdős–Rényi graph: each of the `n(n-1)/2` pairs is an edge with
/// probability `p`. Fixed `seed` gives a fixed graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star with `leaves` leaves: vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// The `d`-dimensional hypercube: `2^d` vertices, edges between ids
/// differing in one bit.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// A uniformly random total order on `n` vertices.
pub fn random_order(n: usize, seed: u64) -> VertexOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(&mut rng);
    VertexOrder::from_sequence(seq).expect("shuffled permutation")
}

/// Synthetic collaboration-style graph: `cliques` vertex groups of size
/// `size_min..=size_max` are made complete, then `noise` random extra edges
/// are sprinkled in. Groups overlap, so the result has many large cliques
/// and a small community degeneracy relative to its size.
pub fn planted_cliques(
    n: usize,
    cliques: usize,
    size_min: usize,
    size_max: usize,
    noise: usize,
    seed: u64,
) -> Graph {
    assert!(size_min >= 2 && size_min <= size_max && size_max <= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut members = Vec::with_capacity(size_max);
    for _ in 0..cliques {
        let size = rng.random_range(size_min..=size_max);
        members.clear();
        while members.len() < size {
            let v = rng.random_range(0..n);
            if !members.contains(&v) {
                members.push(v);
            }
        }
        for i in 0..size {
            for j in (i + 1)..size {
                edges.push((members[i], members[j]));
            }
        }
    }
    for _ in 0..noise {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}
