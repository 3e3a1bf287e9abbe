//! Per-edge communities: for a directed edge `(u, v)`, the community is the
//! intersection of `u`'s out-neighbors and `v`'s in-neighbors — exactly the
//! vertices that close a triangle supported by that edge. Each triangle is
//! stored under its one supporting edge.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{orient, EdgeId, Graph, OrientedGraph, VertexId, VertexOrder};
use crate::ordering::EdgeOrder;

/// Community size above which [`build_probe`] falls back from per-community
/// adjacency matrices to a global hash set.
pub const MATRIX_GAMMA_LIMIT: usize = 256;

/// Concatenated community member arrays, one slice per directed edge, each
/// sorted ascending by rank. The total member count equals the triangle
/// count of the graph.
#[derive(Debug, Clone)]
pub struct CommunityStore {
    offsets: Vec<usize>,
    members: Vec<VertexId>,
}

impl CommunityStore {
    pub fn community(&self, e: EdgeId) -> &[VertexId] {
        &self.members[self.offsets[e]..self.offsets[e + 1]]
    }

    pub fn size(&self, e: EdgeId) -> usize {
        self.offsets[e + 1] - self.offsets[e]
    }

    pub fn edge_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Total member count across all edges; equals the triangle count.
    pub fn total(&self) -> usize {
        self.members.len()
    }

    /// The largest community size, written gamma elsewhere.
    pub fn max_size(&self) -> usize {
        (0..self.edge_count()).map(|e| self.size(e)).max().unwrap_or(0)
    }
}

fn merge_count_by_rank(a: &[VertexId], b: &[VertexId], rank: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match rank[a[i]].cmp(&rank[b[j]]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn merge_into_by_rank(a: &[VertexId], b: &[VertexId], rank: &[usize], out: &mut [VertexId]) {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match rank[a[i]].cmp(&rank[b[j]]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out[k] = a[i];
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    debug_assert_eq!(k, out.len());
}

/// Builds the sorted community of every directed edge by merging the tail's
/// out-list with the head's in-list (both rank-sorted). Output ranges are
/// sized in a first parallel pass and filled disjointly in a second.
pub fn build_communities(dag: &OrientedGraph) -> CommunityStore {
    let n = dag.n();
    let m = dag.edge_count();
    let rank = dag.order().ranks();

    // Transposed adjacency: in-lists come out rank-sorted because tails are
    // visited in rank order.
    let mut in_offsets = Vec::with_capacity(n + 1);
    let mut acc = 0;
    in_offsets.push(0);
    for v in 0..n {
        acc += dag.in_degree(v);
        in_offsets.push(acc);
    }
    let mut in_tails = vec![0 as VertexId; acc];
    let mut fill = in_offsets.clone();
    for p in 0..n {
        let u = dag.order().vertex_at(p);
        for &v in dag.out(u) {
            in_tails[fill[v]] = u;
            fill[v] += 1;
        }
    }
    let in_list = |v: VertexId| &in_tails[in_offsets[v]..in_offsets[v + 1]];

    let sizes: Vec<usize> = (0..m)
        .into_par_iter()
        .map(|e| {
            let (u, v) = dag.edge_endpoints(e);
            merge_count_by_rank(dag.out(u), in_list(v), rank)
        })
        .collect();
    let mut offsets = Vec::with_capacity(m + 1);
    let mut total = 0;
    offsets.push(0);
    for &s in &sizes {
        total += s;
        offsets.push(total);
    }

    let mut members = vec![0 as VertexId; total];
    let mut slices: Vec<&mut [VertexId]> = Vec::with_capacity(m);
    let mut rest: &mut [VertexId] = &mut members;
    for &s in &sizes {
        let (head, tail) = rest.split_at_mut(s);
        slices.push(head);
        rest = tail;
    }
    slices.into_par_iter().enumerate().for_each(|(e, out)| {
        let (u, v) = dag.edge_endpoints(e);
        merge_into_by_rank(dag.out(u), in_list(v), rank, out);
    });

    let store = CommunityStore { offsets, members };
    debug_assert!((0..m).all(|e| {
        let (u, v) = dag.edge_endpoints(e);
        let c = store.community(e);
        c.windows(2).all(|w| rank[w[0]] < rank[w[1]])
            && c.iter().all(|&w| rank[u] < rank[w] && rank[w] < rank[v])
    }));
    store
}

/// Exact triangle count: orient by vertex id and sum `|out(u) ∩ out(v)|`
/// over all directed edges, which counts every triangle once at the edge
/// joining its two smallest vertices.
pub fn count_triangles(g: &Graph) -> u64 {
    let dag = orient(g, &VertexOrder::identity(g.n())).expect("identity order fits");
    let rank = dag.order().ranks();
    (0..dag.edge_count())
        .into_par_iter()
        .map(|e| {
            let (u, v) = dag.edge_endpoints(e);
            merge_count_by_rank(dag.out(u), dag.out(v), rank) as u64
        })
        .sum()
}

/// Community of edge `e` restricted to edges ordered strictly after `e`:
/// the common neighbors `w` of `e`'s endpoints such that both `{u,w}` and
/// `{w,v}` come after `e` under `order`. `dag` must be oriented by vertex
/// id so that its edge ids are the canonical ids `order` ranks.
pub fn restricted_community(
    dag: &OrientedGraph,
    e: EdgeId,
    order: &EdgeOrder,
) -> Vec<VertexId> {
    let (u, v) = dag.edge_endpoints(e);
    let g = dag.graph();
    let bound = order.rank(e);
    let later = |a: VertexId, b: VertexId| -> bool {
        let id = dag
            .edge_id(a.min(b), a.max(b))
            .expect("spoke edge exists");
        order.rank(id) > bound
    };
    let (na, nb) = (g.neighbors(u), g.neighbors(v));
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < na.len() && j < nb.len() {
        match na[i].cmp(&nb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let w = na[i];
                if later(u, w) && later(w, v) {
                    out.push(w);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Per-community adjacency matrices: for each edge `e`, a `|C(e)|²` bit
/// matrix over the community members (relabeled to their positions in the
/// sorted member list) with bit `(i, j)` set when the directed edge
/// `(members[i], members[j])` exists.
#[derive(Debug, Clone)]
pub struct CommunityMatrices {
    word_offsets: Vec<usize>,
    dims: Vec<u32>,
    words: Vec<u64>,
}

impl CommunityMatrices {
    fn build(dag: &OrientedGraph, store: &CommunityStore) -> CommunityMatrices {
        let m = store.edge_count();
        let rank = dag.order().ranks();
        let dims: Vec<u32> = (0..m).map(|e| store.size(e) as u32).collect();
        let mut word_offsets = Vec::with_capacity(m + 1);
        let mut acc = 0;
        word_offsets.push(0);
        for &d in &dims {
            let bits = (d as usize) * (d as usize);
            acc += bits.div_ceil(64);
            word_offsets.push(acc);
        }
        let mut words = vec![0u64; acc];
        let mut slices: Vec<&mut [u64]> = Vec::with_capacity(m);
        let mut rest: &mut [u64] = &mut words;
        for e in 0..m {
            let (head, tail) = rest.split_at_mut(word_offsets[e + 1] - word_offsets[e]);
            slices.push(head);
            rest = tail;
        }
        slices.into_par_iter().enumerate().for_each(|(e, out)| {
            let members = store.community(e);
            let d = members.len();
            for (i, &a) in members.iter().enumerate() {
                // Mark members[j] that a points to.
                let (mut x, mut y) = (0, 0);
                let outs = dag.out(a);
                while x < outs.len() && y < d {
                    match rank[outs[x]].cmp(&rank[members[y]]) {
                        std::cmp::Ordering::Less => x += 1,
                        std::cmp::Ordering::Greater => y += 1,
                        std::cmp::Ordering::Equal => {
                            let bit = i * d + y;
                            out[bit / 64] |= 1 << (bit % 64);
                            x += 1;
                            y += 1;
                        }
                    }
                }
            }
        });
        CommunityMatrices {
            word_offsets,
            dims,
            words,
        }
    }

    pub fn dim(&self, e: EdgeId) -> usize {
        self.dims[e] as usize
    }

    /// Whether the directed edge from member position `i` to member
    /// position `j` of community `e` exists.
    pub fn probe(&self, e: EdgeId, i: usize, j: usize) -> bool {
        let d = self.dims[e] as usize;
        debug_assert!(i < d && j < d);
        let bit = i * d + j;
        self.words[self.word_offsets[e] + bit / 64] >> (bit % 64) & 1 == 1
    }
}

/// Directed-edge existence test in expected constant time. Strategy depends
/// on the largest community size: small communities get the per-community
/// adjacency matrices, large ones a global hash set over directed pairs.
#[derive(Debug, Clone)]
pub enum EdgeProbe {
    Hash(HashSet<(u32, u32)>),
    Matrices(CommunityMatrices),
}

pub fn build_probe(dag: &OrientedGraph, store: &CommunityStore, gamma: usize) -> EdgeProbe {
    build_probe_with_limit(dag, store, gamma, MATRIX_GAMMA_LIMIT)
}

pub fn build_probe_with_limit(
    dag: &OrientedGraph,
    store: &CommunityStore,
    gamma: usize,
    limit: usize,
) -> EdgeProbe {
    if gamma <= limit {
        EdgeProbe::Matrices(CommunityMatrices::build(dag, store))
    } else {
        assert!(dag.n() < u32::MAX as usize);
        let mut set = HashSet::with_capacity(dag.edge_count());
        for e in 0..dag.edge_count() {
            let (u, v) = dag.edge_endpoints(e);
            set.insert((u as u32, v as u32));
        }
        EdgeProbe::Hash(set)
    }
}

impl EdgeProbe {
    /// Whether the directed edge `(u, v)` exists in `dag`.
    pub fn has_edge(&self, dag: &OrientedGraph, u: VertexId, v: VertexId) -> bool {
        match self {
            EdgeProbe::Hash(set) => set.contains(&(u as u32, v as u32)),
            EdgeProbe::Matrices(_) => dag.has_edge(u, v),
        }
    }

    pub fn is_matrix(&self) -> bool {
        matches!(self, EdgeProbe::Matrices(_))
    }
}
