//! Graph ingestion and representation: a compressed undirected graph, total
//! vertex orders, and the acyclic orientation a total order induces.

use std::io::{BufRead, Read, Write};

use crate::{Error, Result};

pub type VertexId = usize;

/// Index into the canonical directed-edge array of an [`OrientedGraph`].
///
/// Directed edges are stored grouped by tail, tails in ascending rank, and
/// within a tail's group sorted by head rank. For a graph oriented by vertex
/// id this is the ascending `(u, v)` order with `u < v`.
pub type EdgeId = usize;

const CACHE_MAGIC: &[u8; 8] = b"KCLQGRPH";
const CACHE_VERSION: u64 = 1;

/// Simple undirected graph in compressed adjacency (CSR) form.
///
/// No self-loops, no duplicate edges; each neighbor list is sorted ascending
/// by vertex id; the sum of all list lengths is `2m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    adj: Vec<VertexId>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices, dropping self-loops and
    /// duplicate (or reversed duplicate) pairs.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let mut pairs: Vec<(VertexId, VertexId)> = edges
            .iter()
            .filter(|&&(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        for &(_, v) in &pairs {
            assert!(v < n, "edge endpoint {v} out of bounds for n={n}");
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut adj = vec![0; acc];
        let mut fill = offsets.clone();
        for &(u, v) in &pairs {
            adj[fill[u]] = v;
            fill[u] += 1;
            adj[fill[v]] = u;
            fill[v] += 1;
        }
        // Lists come out sorted because pairs are processed in ascending
        // order and (v, u) entries for a fixed v arrive with increasing u.
        debug_assert!((0..n).all(|u| adj[offsets[u]..offsets[u + 1]].windows(2).all(|w| w[0] < w[1])));
        Graph { offsets, adj }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges (each counted once).
    pub fn m(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending. This is the canonical edge
    /// order: position `i` in this sequence is edge id `i` of an
    /// identity-oriented graph.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// Writes the graph as a whitespace-separated edge list, one edge per line.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        for (u, v) in self.edges() {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    /// Writes the binary cache form: magic, version, n, m, offset array,
    /// neighbor array, all little-endian 64-bit.
    pub fn write_cache<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(CACHE_MAGIC)?;
        let mut put = |x: u64| w.write_all(&x.to_le_bytes());
        put(CACHE_VERSION)?;
        put(self.n() as u64)?;
        put(self.m() as u64)?;
        for &o in &self.offsets {
            put(o as u64)?;
        }
        for &v in &self.adj {
            put(v as u64)?;
        }
        Ok(())
    }

    /// Reads a graph previously written by [`Graph::write_cache`].
    pub fn read_cache<R: Read>(mut r: R) -> Result<Graph> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Cache("bad magic bytes".into()));
        }
        let mut get = || -> Result<u64> {
            let mut b = [0u8; 8];
            r.read_exact(&mut b)?;
            Ok(u64::from_le_bytes(b))
        };
        let version = get()?;
        if version != CACHE_VERSION {
            return Err(Error::Cache(format!("unsupported version {version}")));
        }
        let n = get()? as usize;
        let m = get()? as usize;
        let mut offsets = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            offsets.push(get()? as usize);
        }
        let mut adj = Vec::with_capacity(2 * m);
        for _ in 0..2 * m {
            adj.push(get()? as usize);
        }
        if offsets.first() != Some(&0)
            || offsets.last() != Some(&(2 * m))
            || offsets.windows(2).any(|w| w[0] > w[1])
        {
            return Err(Error::Cache("offset array inconsistent".into()));
        }
        let g = Graph { offsets, adj };
        for u in 0..n {
            let nb = g.neighbors(u);
            if nb.windows(2).any(|w| w[0] >= w[1]) || nb.iter().any(|&v| v >= n || v == u) {
                return Err(Error::Cache(format!("neighbor list of {u} invalid")));
            }
        }
        Ok(g)
    }
}

/// Result of ingesting an edge list: the compacted graph plus the original
/// id of each compacted vertex (`ids[i]` is the raw id of vertex `i`).
#[derive(Debug)]
pub struct LoadResult {
    pub graph: Graph,
    pub ids: Vec<u64>,
}

/// Parses a whitespace-separated edge list. Lines starting with `#` are
/// comments, blank lines are skipped, duplicate/reversed pairs and
/// self-loops are dropped, and sparse vertex ids are compacted to `[0, n)`
/// in ascending numeric order.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadResult> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    let mut ids: Vec<u64> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut next_id = |what: &str| -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("missing {what} vertex id"),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid vertex id {tok:?}"),
            })
        };
        let u = next_id("first")?;
        let v = next_id("second")?;
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected exactly two vertex ids".into(),
            });
        }
        ids.push(u);
        ids.push(v);
        raw_edges.push((u, v));
    }
    ids.sort_unstable();
    ids.dedup();
    let compact = |raw: u64| ids.binary_search(&raw).expect("id present");
    let edges: Vec<(VertexId, VertexId)> = raw_edges
        .into_iter()
        .map(|(u, v)| (compact(u), compact(v)))
        .collect();
    let graph = Graph::from_edges(ids.len(), &edges);
    Ok(LoadResult { graph, ids })
}

/// A total order on vertices: `rank` maps vertex id to position in `[0, n)`
/// and `inv` maps position back to vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    rank: Vec<usize>,
    inv: Vec<VertexId>,
}

impl VertexOrder {
    pub fn identity(n: usize) -> VertexOrder {
        VertexOrder {
            rank: (0..n).collect(),
            inv: (0..n).collect(),
        }
    }

    /// Builds from a rank array (`rank[u]` = position of `u`), validating
    /// that it is a permutation.
    pub fn from_rank(rank: Vec<usize>) -> Result<VertexOrder> {
        let n = rank.len();
        let mut inv = vec![usize::MAX; n];
        for (u, &p) in rank.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Param("rank array is not a permutation".into()));
            }
            inv[p] = u;
        }
        Ok(VertexOrder { rank, inv })
    }

    /// Builds from a removal sequence (`seq[p]` = vertex at position `p`).
    pub fn from_sequence(seq: Vec<VertexId>) -> Result<VertexOrder> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (p, &u) in seq.iter().enumerate() {
            if u >= n || rank[u] != usize::MAX {
                return Err(Error::Param("sequence is not a permutation".into()));
            }
            rank[u] = p;
        }
        Ok(VertexOrder { rank, inv: seq })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, u: VertexId) -> usize {
        self.rank[u]
    }

    pub fn vertex_at(&self, p: usize) -> VertexId {
        self.inv[p]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn sequence(&self) -> &[VertexId] {
        &self.inv
    }

    /// Serializes as newline-separated vertex ids in order position 0..n.
    pub fn write_lines<W: Write>(&self, mut w: W) -> Result<()> {
        for &u in &self.inv {
            writeln!(w, "{u}")?;
        }
        Ok(())
    }

    pub fn read_lines<R: BufRead>(r: R) -> Result<VertexOrder> {
        let mut seq = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            seq.push(t.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid vertex id {t:?}"),
            })?);
        }
        VertexOrder::from_sequence(seq)
    }
}

/// A graph oriented by a total order: every undirected edge appears exactly
/// once, directed from the endpoint of lower rank to the endpoint of higher
/// rank, so the result is acyclic by construction. Out-lists are sorted
/// ascending by rank.
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    graph: Graph,
    order: VertexOrder,
    out_offsets: Vec<usize>,
    out_heads: Vec<VertexId>,
    tails: Vec<VertexId>,
    in_degree: Vec<usize>,
}

/// Directs each edge of `g` from lower to higher rank under `order`.
pub fn orient(g: &Graph, order: &VertexOrder) -> Result<OrientedGraph> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::Dimension(format!(
            "order has {} entries for a graph with {n} vertices",
            order.len()
        )));
    }
    let mut out_degree = vec![0usize; n];
    let mut in_degree = vec![0usize; n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            if order.rank(u) < order.rank(v) {
                out_degree[u] += 1;
            } else {
                in_degree[u] += 1;
            }
        }
    }
    let mut out_offsets = Vec::with_capacity(n + 1);
    let mut acc = 0;
    out_offsets.push(0);
    for &d in &out_degree {
        acc += d;
        out_offsets.push(acc);
    }
    let mut out_heads = vec![0; acc];
    let mut tails = vec![0; acc];
    let mut fill = out_offsets.clone();
    for u in 0..n {
        let mut heads: Vec<VertexId> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| order.rank(u) < order.rank(v))
            .collect();
        heads.sort_unstable_by_key(|&v| order.rank(v));
        for v in heads {
            out_heads[fill[u]] = v;
            tails[fill[u]] = u;
            fill[u] += 1;
        }
    }
    let dag = OrientedGraph {
        graph: g.clone(),
        order: order.clone(),
        out_offsets,
        out_heads,
        tails,
        in_degree,
    };
    debug_assert!(dag.check_acyclic());
    Ok(dag)
}

impl OrientedGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of directed edges, equal to the undirected edge count.
    pub fn edge_count(&self) -> usize {
        self.out_heads.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &VertexOrder {
        &self.order
    }

    pub fn rank(&self, u: VertexId) -> usize {
        self.order.rank(u)
    }

    /// Out-neighbors of `u`, sorted ascending by rank.
    pub fn out(&self, u: VertexId) -> &[VertexId] {
        &self.out_heads[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out_offsets[u + 1] - self.out_offsets[u]
    }

    pub fn in_degree(&self, u: VertexId) -> usize {
        self.in_degree[u]
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n()).map(|u| self.out_degree(u)).max().unwrap_or(0)
    }

    /// Edge ids owned by tail `u`.
    pub fn edge_ids(&self, u: VertexId) -> std::ops::Range<EdgeId> {
        self.out_offsets[u]..self.out_offsets[u + 1]
    }

    /// Tail and head of a directed edge.
    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.tails[e], self.out_heads[e])
    }

    /// Id of the directed edge `(u, v)` if it exists.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let out = self.out(u);
        let target = self.order.rank(v);
        out.binary_search_by_key(&target, |&w| self.order.rank(w))
            .ok()
            .map(|pos| self.out_offsets[u] + pos)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    fn check_acyclic(&self) -> bool {
        (0..self.edge_count()).all(|e| {
            let (u, v) = self.edge_endpoints(e);
            self.order.rank(u) < self.order.rank(v)
        })
    }
}

/// An induced subgraph with vertices relabeled to consecutive ids that
/// preserve relative rank, oriented accordingly. `to_parent[i]` maps a
/// relabeled id back to the parent graph's vertex id.
#[derive(Debug)]
pub struct InducedSubgraph {
    pub dag: OrientedGraph,
    pub to_parent: Vec<VertexId>,
}

/// Extracts the subgraph of `dag` induced by `verts`, which must be sorted
/// ascending by rank. The relabeled graph is oriented by vertex id, which
/// coincides with the inherited rank order.
pub fn induced_subgraph(dag: &OrientedGraph, verts: &[VertexId]) -> InducedSubgraph {
    debug_assert!(verts.windows(2).all(|w| dag.rank(w[0]) < dag.rank(w[1])));
    let k = verts.len();
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        // Both dag.out(u) and verts are sorted by rank; merge them.
        let out = dag.out(u);
        let (mut a, mut b) = (0, i + 1);
        while a < out.len() && b < k {
            let ra = dag.rank(out[a]);
            let rb = dag.rank(verts[b]);
            match ra.cmp(&rb) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    edges.push((i, b));
                    a += 1;
                    b += 1;
                }
            }
        }
    }
    let graph = Graph::from_edges(k, &edges);
    let dag = orient(&graph, &VertexOrder::identity(k)).expect("identity order fits");
    InducedSubgraph {
        dag,
        to_parent: verts.to_vec(),
    }
}
