//! The four preprocessing orders: exact and approximate degeneracy orders on
//! vertices, and exact (greedy) and approximate community-degeneracy orders
//! on edges.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use crate::graph::{EdgeId, Graph, VertexId, VertexOrder};
use crate::{Error, Result};

/// A vertex order together with the out-degree bound it achieves: the exact
/// degeneracy `s` for [`degeneracy_order`], the achieved maximum out-degree
/// for [`approx_degeneracy_order`].
#[derive(Debug, Clone)]
pub struct DegeneracyResult {
    pub order: VertexOrder,
    pub s: usize,
}

/// A total order on the canonical edge ids of a graph (ascending `(u, v)`
/// pairs with `u < v`, i.e. the edge ids of an identity-oriented graph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    rank: Vec<usize>,
    inv: Vec<EdgeId>,
}

impl EdgeOrder {
    pub fn from_sequence(seq: Vec<EdgeId>) -> Result<EdgeOrder> {
        let m = seq.len();
        let mut rank = vec![usize::MAX; m];
        for (p, &e) in seq.iter().enumerate() {
            if e >= m || rank[e] != usize::MAX {
                return Err(Error::Param("edge sequence is not a permutation".into()));
            }
            rank[e] = p;
        }
        Ok(EdgeOrder { rank, inv: seq })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, e: EdgeId) -> usize {
        self.rank[e]
    }

    pub fn edge_at(&self, p: usize) -> EdgeId {
        self.inv[p]
    }

    pub fn write_lines<W: Write>(&self, mut w: W) -> Result<()> {
        for &e in &self.inv {
            writeln!(w, "{e}")?;
        }
        Ok(())
    }

    pub fn read_lines<R: BufRead>(r: R) -> Result<EdgeOrder> {
        let mut seq = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            seq.push(t.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid edge id {t:?}"),
            })?);
        }
        EdgeOrder::from_sequence(seq)
    }
}

/// An edge order plus the largest restricted-community size observed while
/// constructing it. For the greedy variant this equals the graph's community
/// degeneracy; for the approximate variant it is a `(3+eps)`-factor bound.
/// `rounds` is the number of peeling rounds the construction used.
#[derive(Debug, Clone)]
pub struct CommDegResult {
    pub edge_order: EdgeOrder,
    pub sigma: usize,
    pub rounds: usize,
}

/// Min-priority queue over items `0..len` keyed by small integers, popping
/// the smallest key and breaking ties by smallest item id. Keys may only
/// decrease.
struct BucketQueue {
    buckets: Vec<BTreeSet<usize>>,
    key: Vec<usize>,
    min: usize,
    remaining: usize,
}

impl BucketQueue {
    fn new(keys: Vec<usize>) -> BucketQueue {
        let max = keys.iter().copied().max().unwrap_or(0);
        let mut buckets = vec![BTreeSet::new(); max + 1];
        for (item, &k) in keys.iter().enumerate() {
            buckets[k].insert(item);
        }
        BucketQueue {
            buckets,
            remaining: keys.len(),
            key: keys,
            min: 0,
        }
    }

    fn pop_min(&mut self) -> Option<(usize, usize)> {
        if self.remaining == 0 {
            return None;
        }
        while self.buckets[self.min].is_empty() {
            self.min += 1;
        }
        let item = *self.buckets[self.min].iter().next().expect("non-empty");
        self.buckets[self.min].remove(&item);
        self.remaining -= 1;
        Some((self.key[item], item))
    }

    fn decrease(&mut self, item: usize) {
        let k = self.key[item];
        debug_assert!(k > 0);
        if self.buckets[k].remove(&item) {
            self.key[item] = k - 1;
            self.buckets[k - 1].insert(item);
            self.min = self.min.min(k - 1);
        }
    }

    fn contains(&self, item: usize) -> bool {
        self.buckets[self.key[item]].contains(&item)
    }
}

/// Greedy minimum-degree peeling. Returns the removal order and the exact
/// degeneracy `s`; orienting the graph by this order gives maximum
/// out-degree exactly `s`.
pub fn degeneracy_order(g: &Graph) -> DegeneracyResult {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut queue = BucketQueue::new(degrees);
    let mut seq = Vec::with_capacity(n);
    let mut s = 0;
    while let Some((deg, u)) = queue.pop_min() {
        s = s.max(deg);
        seq.push(u);
        for &v in g.neighbors(u) {
            if queue.contains(v) {
                queue.decrease(v);
            }
        }
    }
    DegeneracyResult {
        order: VertexOrder::from_sequence(seq).expect("peeling visits each vertex once"),
        s,
    }
}

/// Round-based peeling: each round removes every vertex whose current degree
/// is at most `(1+eps)` times the average degree of the remaining graph,
/// appending them in ascending id order. Orienting by the result bounds the
/// maximum out-degree by `(2+2*eps) * s`; the achieved maximum out-degree is
/// reported in `s`.
pub fn approx_degeneracy_order(g: &Graph, eps: f64) -> Result<DegeneracyResult> {
    if eps.is_nan() || eps <= 0.0 || !eps.is_finite() {
        return Err(Error::Param(format!("epsilon must be positive, got {eps}")));
    }
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut in_batch = vec![false; n];
    let mut remaining_vertices = n;
    let mut remaining_edges = g.m();
    let mut seq = Vec::with_capacity(n);
    while remaining_vertices > 0 {
        let avg = 2.0 * remaining_edges as f64 / remaining_vertices as f64;
        let threshold = (1.0 + eps) * avg;
        let batch: Vec<VertexId> = (0..n)
            .filter(|&u| !removed[u] && degree[u] as f64 <= threshold)
            .collect();
        debug_assert!(!batch.is_empty(), "a minimum-degree vertex always qualifies");
        for &u in &batch {
            in_batch[u] = true;
        }
        let mut endpoint_hits = 0usize;
        for &u in &batch {
            for &v in g.neighbors(u) {
                if removed[v] {
                    continue;
                }
                if in_batch[v] {
                    endpoint_hits += 1; // counted from both endpoints
                } else {
                    degree[v] -= 1;
                    endpoint_hits += 2;
                }
            }
        }
        remaining_edges -= endpoint_hits / 2;
        remaining_vertices -= batch.len();
        for &u in &batch {
            removed[u] = true;
            in_batch[u] = false;
        }
        seq.extend(batch);
    }
    let order = VertexOrder::from_sequence(seq).expect("each vertex removed once");
    let achieved = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .filter(|&&v| order.rank(v) > order.rank(u))
                .count()
        })
        .max()
        .unwrap_or(0);
    Ok(DegeneracyResult { order, s: achieved })
}

/// Canonical edge array plus, for every vertex, its incident `(neighbor,
/// edge id)` pairs sorted by neighbor.
struct EdgeIncidence {
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl EdgeIncidence {
    fn build(g: &Graph) -> EdgeIncidence {
        let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = (0..g.n())
            .map(|u| Vec::with_capacity(g.degree(u)))
            .collect();
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(w, _)| w);
        }
        EdgeIncidence { edges, adj }
    }

    /// Common neighbors of the endpoints of `(u, v)` as
    /// `(w, edge {u,w}, edge {w,v})` triples, ascending in `w`.
    fn common(&self, u: VertexId, v: VertexId) -> Vec<(VertexId, EdgeId, EdgeId)> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1, b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// Greedy community-degeneracy order: repeatedly remove the edge supporting
/// the fewest triangles in the remaining graph, smallest edge id on ties.
/// The reported `sigma` is the exact community degeneracy.
pub fn commdeg_order_greedy(g: &Graph) -> CommDegResult {
    let inc = EdgeIncidence::build(g);
    let m = inc.edges.len();
    let mut alive = vec![true; m];
    let counts: Vec<usize> = inc
        .edges
        .iter()
        .map(|&(u, v)| inc.common(u, v).len())
        .collect();
    let mut queue = BucketQueue::new(counts);
    let mut seq = Vec::with_capacity(m);
    let mut sigma = 0;
    while let Some((count, e)) = queue.pop_min() {
        sigma = sigma.max(count);
        alive[e] = false;
        seq.push(e);
        let (u, v) = inc.edges[e];
        for (_, eu, ev) in inc.common(u, v) {
            if alive[eu] && alive[ev] {
                queue.decrease(eu);
                queue.decrease(ev);
            }
        }
    }
    CommDegResult {
        edge_order: EdgeOrder::from_sequence(seq).expect("each edge removed once"),
        sigma,
        rounds: m,
    }
}

/// Round-based edge peeling: every round removes all edges supporting at
/// most `(3+eps) * T / m` triangles, where `T` and `m` are the remaining
/// triangle and edge counts, ties by edge id. The reported `sigma` bounds
/// every restricted community by `(3+eps)` times the exact community
/// degeneracy, and the round count is `O(log_{1+eps} m)`.
pub fn approx_commdeg_order(g: &Graph, eps: f64) -> Result<CommDegResult> {
    if eps.is_nan() || eps <= 0.0 || !eps.is_finite() {
        return Err(Error::Param(format!("epsilon must be positive, got {eps}")));
    }
    let inc = EdgeIncidence::build(g);
    let m = inc.edges.len();

    // Triangle list with the three edge ids of each triangle, plus the
    // triangle ids incident to every edge.
    let mut triangles: Vec<[EdgeId; 3]> = Vec::new();
    for (e, &(u, v)) in inc.edges.iter().enumerate() {
        for (w, eu, ev) in inc.common(u, v) {
            if w > v {
                triangles.push([e, eu, ev]);
            }
        }
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (t, tri) in triangles.iter().enumerate() {
        for &e in tri {
            incident[e].push(t);
        }
    }

    let mut counts: Vec<usize> = incident.iter().map(|l| l.len()).collect();
    let mut tri_alive = vec![true; triangles.len()];
    let mut edge_alive = vec![true; m];
    let mut remaining_tris = triangles.len();
    let mut remaining_edges = m;
    let mut seq = Vec::with_capacity(m);
    let mut sigma = 0;
    let mut rounds = 0;
    while remaining_edges > 0 {
        rounds += 1;
        let threshold = (3.0 + eps) * remaining_tris as f64 / remaining_edges as f64;
        let batch: Vec<EdgeId> = (0..m)
            .filter(|&e| edge_alive[e] && counts[e] as f64 <= threshold)
            .collect();
        debug_assert!(!batch.is_empty(), "an edge at the average always qualifies");
        for &e in &batch {
            sigma = sigma.max(counts[e]);
            edge_alive[e] = false;
        }
        for &e in &batch {
            for &t in &incident[e] {
                if !tri_alive[t] {
                    continue;
                }
                tri_alive[t] = false;
                remaining_tris -= 1;
                for &f in &triangles[t] {
                    if edge_alive[f] {
                        counts[f] -= 1;
                    }
                }
            }
        }
        remaining_edges -= batch.len();
        seq.extend(batch);
    }
    Ok(CommDegResult {
        edge_order: EdgeOrder::from_sequence(seq).expect("each edge removed once"),
        sigma,
        rounds,
    })
}
