//! Slow, independent reference implementations used to cross-check the
//! engine. Everything here works off its own adjacency-matrix copy of the
//! graph and shares no code with the search or ordering machinery.

use itertools::Itertools;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

const CLIQUE_VERTEX_LIMIT: usize = 30;
const PEEL_VERTEX_LIMIT: usize = 2000;

/// Dense adjacency built fresh from the edge list; one u64 bitmask per row
/// for graphs small enough to brute-force.
struct BitAdjacency {
    n: usize,
    rows: Vec<u64>,
}

impl BitAdjacency {
    fn build(g: &Graph) -> Result<BitAdjacency> {
        let n = g.n();
        if n > CLIQUE_VERTEX_LIMIT {
            return Err(Error::OracleLimit(format!(
                "brute-force clique oracle refuses n={n} > {CLIQUE_VERTEX_LIMIT}"
            )));
        }
        let mut rows = vec![0u64; n];
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(BitAdjacency { n, rows })
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }
}

/// Lists all k-cliques by checking every one of the `C(n, k)` vertex
/// subsets. Refuses graphs with more than 30 vertices. Returned cliques are
/// sorted, and so is the outer list.
pub fn brute_force_cliques(g: &Graph, k: usize) -> Result<Vec<Vec<VertexId>>> {
    let adj = BitAdjacency::build(g)?;
    if k == 0 || k > adj.n {
        return Ok(Vec::new());
    }
    let cliques: Vec<Vec<VertexId>> = (0..adj.n)
        .combinations(k)
        .filter(|subset| {
            subset
                .iter()
                .tuple_combinations()
                .all(|(&u, &v)| adj.adjacent(u, v))
        })
        .collect();
    Ok(cliques)
}

/// Counts cliques of every size at once: `counts[s]` is the number of
/// s-cliques. Enumerates clique subsets recursively in increasing-vertex
/// order, abandoning a branch as soon as the subset stops being a clique;
/// this visits exactly the cliques the subset scan would keep.
pub fn brute_force_clique_counts(g: &Graph) -> Result<Vec<u64>> {
    let adj = BitAdjacency::build(g)?;
    let mut counts = vec![0u64; adj.n + 1];
    counts[0] = 1; // the empty subset
    fn extend(adj: &BitAdjacency, cand: u64, size: usize, counts: &mut [u64]) {
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            counts[size + 1] += 1;
            // Only vertices above v that are adjacent to everything chosen.
            let next = cand & adj.rows[v] & !((1u64 << (v + 1)) - 1);
            extend(adj, next, size + 1, counts);
        }
    }
    let all = if adj.n == 64 { !0 } else { (1u64 << adj.n) - 1 };
    extend(&adj, all, 0, &mut counts);
    Ok(counts)
}

/// Exact degeneracy by greedy peeling, rescanning all remaining vertices
/// for the minimum degree at every step.
pub fn exact_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= PEEL_VERTEX_LIMIT, "peeling oracle refuses n={n}");
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut s = 0;
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| alive[u])
            .min_by_key(|&u| (degree[u], u))
            .expect("vertex remains");
        s = s.max(degree[u]);
        alive[u] = false;
        for &v in g.neighbors(u) {
            if alive[v] {
                degree[v] -= 1;
            }
        }
    }
    s
}

/// Exact community degeneracy by greedy edge peeling, recomputing every
/// remaining edge's triangle support from scratch at each step.
pub fn exact_community_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= PEEL_VERTEX_LIMIT, "peeling oracle refuses n={n}");
    let mut alive: Vec<Vec<bool>> = (0..n).map(|_| vec![false; n]).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for &(u, v) in &edges {
        alive[u][v] = true;
        alive[v][u] = true;
    }
    let support = |alive: &[Vec<bool>], u: usize, v: usize| -> usize {
        (0..n).filter(|&w| alive[u][w] && alive[v][w]).count()
    };
    let mut sigma = 0;
    while !edges.is_empty() {
        let (idx, best) = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i, support(&alive, u, v)))
            .min_by_key(|&(i, s)| (s, edges[i]))
            .expect("edge remains");
        sigma = sigma.max(best);
        let (u, v) = edges.swap_remove(idx);
        alive[u][v] = false;
        alive[v][u] = false;
    }
    sigma
}

/// Counts pairs of candidates with at least `c` candidates ordered strictly
/// between them, by quadratic scan over the sorted positions.
pub fn brute_force_relevant_pairs(ranks: &[usize], c: usize) -> u64 {
    let mut sorted = ranks.to_vec();
    sorted.sort_unstable();
    let mut count = 0;
    for i in 0..sorted.len() {
        for j in (i + 1)..sorted.len() {
            let between = j - i - 1;
            if between >= c {
                count += 1;
            }
        }
    }
    count
}

/// Triangle count by scanning all vertex triples of the adjacency matrix.
pub fn brute_force_triangles(g: &Graph) -> Result<u64> {
    let adj = BitAdjacency::build(g)?;
    let mut t = 0;
    for u in 0..adj.n {
        for v in (u + 1)..adj.n {
            if !adj.adjacent(u, v) {
                continue;
            }
            for w in (v + 1)..adj.n {
                if adj.adjacent(u, w) && adj.adjacent(v, w) {
                    t += 1;
                }
            }
        }
    }
    Ok(t)
}

/// Everything the exhaustive oracles can say about a small graph.
#[derive(Debug)]
pub struct OracleReport {
    pub n: usize,
    pub m: usize,
    pub triangle_count: u64,
    pub degeneracy: usize,
    pub community_degeneracy: usize,
    /// `clique_counts[s]` = number of s-cliques, `s` in `0..=n`.
    pub clique_counts: Vec<u64>,
}

pub fn report(g: &Graph) -> Result<OracleReport> {
    Ok(OracleReport {
        n: g.n(),
        m: g.m(),
        triangle_count: brute_force_triangles(g)?,
        degeneracy: exact_degeneracy(g),
        community_degeneracy: exact_community_degeneracy(g),
        clique_counts: brute_force_clique_counts(g)?,
    })
}
