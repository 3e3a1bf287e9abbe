//! The clique search itself: a backtracking recursion over candidate sets
//! that grows cliques by an edge (two vertices) per level, probing only
//! vertex pairs with enough candidates ordered between them to still
//! complete a clique. Three drivers feed it: the per-edge community loop,
//! the edge-order (community degeneracy) loop, and the hybrid per-vertex
//! loop that re-orders each out-neighborhood exactly.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;

use crate::community::{
    build_communities, build_probe, CommunityMatrices, CommunityStore, EdgeProbe,
};
use crate::graph::{
    induced_subgraph, orient, EdgeId, Graph, OrientedGraph, VertexId, VertexOrder,
};
use crate::ordering::{
    approx_commdeg_order, approx_degeneracy_order, commdeg_order_greedy, degeneracy_order,
    EdgeOrder,
};
use crate::{Error, Result};

/// A candidate set: vertices sorted ascending by rank. The distance
/// `delta(i, j) = j - i - 1` is the number of candidates ordered strictly
/// between positions `i` and `j`.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    verts: Vec<VertexId>,
}

impl CandidateSet {
    /// Sorts `verts` by rank under `order`.
    pub fn new_sorted(mut verts: Vec<VertexId>, order: &VertexOrder) -> CandidateSet {
        verts.sort_unstable_by_key(|&v| order.rank(v));
        debug_assert!(verts.windows(2).all(|w| w[0] != w[1]));
        CandidateSet { verts }
    }

    /// Wraps a list that is already sorted ascending by rank.
    pub fn from_rank_sorted(verts: Vec<VertexId>) -> CandidateSet {
        CandidateSet { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn verts(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn delta(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        j - i - 1
    }
}

/// Index pairs `(i, j)` with at least `c` positions strictly between them.
fn relevant_index_pairs(len: usize, c: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).flat_map(move |i| (i + c + 1..len).map(move |j| (i, j)))
}

/// The pairs of candidates with at least `c` candidates ordered strictly
/// between them; there are exactly `C(|I|-c, 2)` of them when `|I| > c+1`.
pub fn relevant_pairs<'a>(
    set: &'a CandidateSet,
    c: usize,
) -> impl Iterator<Item = (VertexId, VertexId)> + 'a {
    relevant_index_pairs(set.len(), c).map(move |(i, j)| (set.verts[i], set.verts[j]))
}

/// Where found cliques go: either a bare counter or a buffer of cliques in
/// original vertex ids, each sorted ascending. Both modes tally identically.
#[derive(Debug)]
pub struct CliqueSink {
    collect: bool,
    count: u64,
    cliques: Vec<Vec<VertexId>>,
}

impl CliqueSink {
    pub fn counting() -> CliqueSink {
        CliqueSink {
            collect: false,
            count: 0,
            cliques: Vec::new(),
        }
    }

    pub fn collecting() -> CliqueSink {
        CliqueSink {
            collect: true,
            count: 0,
            cliques: Vec::new(),
        }
    }

    pub fn is_collecting(&self) -> bool {
        self.collect
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn cliques(&self) -> &[Vec<VertexId>] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Vec<VertexId>> {
        self.cliques
    }

    fn emit(&mut self, clique: &[VertexId]) {
        self.count += 1;
        if self.collect {
            let mut c = clique.to_vec();
            c.sort_unstable();
            self.cliques.push(c);
        }
    }

    fn absorb(&mut self, other: CliqueSink) {
        self.count += other.count;
        self.cliques.extend(other.cliques);
    }
}

/// Work counters mirroring the cost terms of the search: probes of vertex
/// pairs, candidate-set intersections, emitted cliques, and the deepest
/// nesting of non-trivial recursive calls (bounded by `(k-2)/2`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct SearchStats {
    pub recursive_calls: u64,
    pub edge_probes: u64,
    pub intersections: u64,
    pub listed_cliques: u64,
    pub max_depth: usize,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.recursive_calls += other.recursive_calls;
        self.edge_probes += other.edge_probes;
        self.intersections += other.intersections;
        self.listed_cliques += other.listed_cliques;
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}

/// How candidate sets are intersected with communities. `Auto` follows the
/// probe: indicator bitsets when per-community matrices are in use, plain
/// merges otherwise. Indicator mode only applies where a task has a fixed
/// community universe (the per-edge drivers); elsewhere it falls back to
/// merging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntersectMode {
    #[default]
    Auto,
    Merge,
    Indicator,
}

/// Search switches. `prune` toggles the between-distance filter on vertex
/// pairs; disabling it changes work counters but never counts.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub prune: bool,
    pub intersect: IntersectMode,
}

impl SearchConfig {
    pub fn new() -> SearchConfig {
        SearchConfig {
            prune: true,
            intersect: IntersectMode::Auto,
        }
    }
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig::new()
    }
}

enum ProbeView<'a> {
    Hash(&'a HashSet<(u32, u32)>),
    Matrix { mat: &'a CommunityMatrices, top: EdgeId },
    BinSearch,
}

/// Read-only context for one search task.
struct SearchCtx<'a> {
    dag: &'a OrientedGraph,
    store: &'a CommunityStore,
    rank: &'a [usize],
    probe: ProbeView<'a>,
    /// Edge-order variant: only edges ranked strictly above this floor may
    /// certify a clique, so each clique is charged to its lowest edge.
    edge_floor: Option<(&'a EdgeOrder, usize)>,
    /// Fixed universe the position arrays index into (the top community).
    top_members: &'a [VertexId],
    use_indicator: bool,
    prune: bool,
    /// Maps search-local vertex ids to output ids (hybrid subgraphs).
    translate: Option<&'a [VertexId]>,
}

impl<'a> SearchCtx<'a> {
    fn xl(&self, v: VertexId) -> VertexId {
        match self.translate {
            Some(map) => map[v],
            None => v,
        }
    }

    fn pair_exists(&self, u: VertexId, v: VertexId, iu: u32, iv: u32) -> bool {
        if let Some((order, floor)) = self.edge_floor {
            return match self.dag.edge_id(u, v) {
                Some(e) => order.rank(e) > floor,
                None => false,
            };
        }
        match &self.probe {
            ProbeView::Hash(set) => set.contains(&(u as u32, v as u32)),
            ProbeView::Matrix { mat, top } => mat.probe(*top, iu as usize, iv as usize),
            ProbeView::BinSearch => self.dag.has_edge(u, v),
        }
    }

    /// Keeps the candidates of `window` that lie in the community of `e`,
    /// and in the edge-order variant drops members whose spoke edges fall
    /// below the task's floor.
    #[allow(clippy::too_many_arguments)]
    fn intersect(
        &self,
        cache: &mut HashMap<EdgeId, Vec<u64>>,
        e: EdgeId,
        u: VertexId,
        v: VertexId,
        window_v: &[VertexId],
        window_p: &[u32],
        out_v: &mut Vec<VertexId>,
        out_p: &mut Vec<u32>,
    ) {
        let comm = self.store.community(e);
        if self.use_indicator && !window_p.is_empty() {
            let bits = cache
                .entry(e)
                .or_insert_with(|| indicator_bits(self.top_members, comm, self.rank));
            for (&w, &p) in window_v.iter().zip(window_p) {
                if bits[p as usize / 64] >> (p % 64) & 1 == 1 {
                    out_v.push(w);
                    out_p.push(p);
                }
            }
        } else {
            let (mut i, mut j) = (0, 0);
            while i < window_v.len() && j < comm.len() {
                match self.rank[window_v[i]].cmp(&self.rank[comm[j]]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        out_v.push(window_v[i]);
                        if !window_p.is_empty() {
                            out_p.push(window_p[i]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        if let Some((order, floor)) = self.edge_floor {
            out_v.retain(|&w| {
                let spoke = |a: VertexId, b: VertexId| match self.dag.edge_id(a, b) {
                    Some(f) => order.rank(f) > floor,
                    None => false,
                };
                spoke(u, w) && spoke(w, v)
            });
        }
    }
}

/// Bitset over positions of `top` marking which of them appear in `comm`;
/// both inputs are rank-sorted.
fn indicator_bits(top: &[VertexId], comm: &[VertexId], rank: &[usize]) -> Vec<u64> {
    let mut bits = vec![0u64; top.len().div_ceil(64)];
    let (mut i, mut j) = (0, 0);
    while i < top.len() && j < comm.len() {
        match rank[top[i]].cmp(&rank[comm[j]]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                bits[i / 64] |= 1 << (i % 64);
                i += 1;
                j += 1;
            }
        }
    }
    bits
}

/// Mutable per-task state: local sink and counters, the growing clique
/// prefix (already in output ids), and the lazily built indicator bitsets.
struct TaskState {
    sink: CliqueSink,
    stats: SearchStats,
    prefix: Vec<VertexId>,
    cache: HashMap<EdgeId, Vec<u64>>,
    scratch: Vec<VertexId>,
}

impl TaskState {
    fn new(collect: bool) -> TaskState {
        TaskState {
            sink: if collect {
                CliqueSink::collecting()
            } else {
                CliqueSink::counting()
            },
            stats: SearchStats::default(),
            prefix: Vec::new(),
            cache: HashMap::new(),
            scratch: Vec::new(),
        }
    }

    fn merge(mut self, other: TaskState) -> TaskState {
        self.sink.absorb(other.sink);
        self.stats.absorb(&other.stats);
        self
    }

    fn emit(&mut self, ctx: &SearchCtx, suffix: &[VertexId]) {
        self.stats.listed_cliques += 1;
        if self.sink.collect {
            self.scratch.clear();
            self.scratch.extend_from_slice(&self.prefix);
            self.scratch.extend(suffix.iter().map(|&v| ctx.xl(v)));
            let scratch = std::mem::take(&mut self.scratch);
            self.sink.emit(&scratch);
            self.scratch = scratch;
        } else {
            self.sink.count += 1;
        }
    }
}

/// The recursive search for `c`-cliques among `verts` (rank-sorted, with
/// optional positions into the task's top community).
fn recurse(
    ctx: &SearchCtx,
    st: &mut TaskState,
    verts: &[VertexId],
    pos: &[u32],
    c: usize,
    depth: usize,
) {
    st.stats.recursive_calls += 1;
    if c >= 2 {
        st.stats.max_depth = st.stats.max_depth.max(depth);
    }
    if c == 1 {
        for &v in verts {
            st.emit(ctx, &[v]);
        }
        return;
    }
    if c == 2 {
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                st.stats.edge_probes += 1;
                let (pi, pj) = pair_positions(pos, i, j);
                if ctx.pair_exists(verts[i], verts[j], pi, pj) {
                    st.emit(ctx, &[verts[i], verts[j]]);
                }
            }
        }
        return;
    }
    let gap = if ctx.prune { c - 2 } else { 0 };
    for i in 0..verts.len() {
        for j in (i + gap + 1)..verts.len() {
            st.stats.edge_probes += 1;
            let (u, v) = (verts[i], verts[j]);
            let (pi, pj) = pair_positions(pos, i, j);
            if !ctx.pair_exists(u, v, pi, pj) {
                continue;
            }
            let e = ctx.dag.edge_id(u, v).expect("probed edge exists");
            st.stats.intersections += 1;
            let mut next_v = Vec::new();
            let mut next_p = Vec::new();
            let window_p = if pos.is_empty() { &[] } else { &pos[i + 1..j] };
            ctx.intersect(
                &mut st.cache,
                e,
                u,
                v,
                &verts[i + 1..j],
                window_p,
                &mut next_v,
                &mut next_p,
            );
            st.prefix.push(ctx.xl(u));
            st.prefix.push(ctx.xl(v));
            recurse(ctx, st, &next_v, &next_p, c - 2, depth + 1);
            st.prefix.pop();
            st.prefix.pop();
        }
    }
}

fn pair_positions(pos: &[u32], i: usize, j: usize) -> (u32, u32) {
    if pos.is_empty() {
        (0, 0)
    } else {
        (pos[i], pos[j])
    }
}

/// Emits cliques for the trivial sizes: every vertex for `k = 1`, every
/// edge for `k = 2`.
fn direct_small_k(g: &Graph, k: usize, sink: &mut CliqueSink, stats: &mut SearchStats) -> u64 {
    let before = sink.count();
    match k {
        1 => {
            for v in 0..g.n() {
                sink.emit(&[v]);
            }
        }
        2 => {
            for (u, v) in g.edges() {
                sink.emit(&[u, v]);
            }
        }
        _ => unreachable!("direct path only covers k <= 2"),
    }
    let emitted = sink.count() - before;
    stats.listed_cliques += emitted;
    emitted
}

fn resolve_indicator(mode: IntersectMode, probe: &EdgeProbe) -> bool {
    match mode {
        IntersectMode::Auto => probe.is_matrix(),
        IntersectMode::Merge => false,
        IntersectMode::Indicator => true,
    }
}

/// Searches for `c`-cliques in `dag[set]`, emitting each with `prefix`
/// prepended. Base cases: every candidate for `c = 1`, every directed edge
/// among the candidates for `c = 2`.
#[allow(clippy::too_many_arguments)]
pub fn recursive_count(
    dag: &OrientedGraph,
    store: &CommunityStore,
    probe: &EdgeProbe,
    set: &CandidateSet,
    c: usize,
    prefix: &[VertexId],
    cfg: &SearchConfig,
    sink: &mut CliqueSink,
    stats: &mut SearchStats,
) {
    assert!(c >= 1, "clique size parameter must be at least 1");
    let ctx = SearchCtx {
        dag,
        store,
        rank: dag.order().ranks(),
        probe: match probe {
            EdgeProbe::Hash(set) => ProbeView::Hash(set),
            // Without a task universe there are no member positions, so
            // matrices cannot be addressed; existence falls back to the
            // out-list binary search.
            EdgeProbe::Matrices(_) => ProbeView::BinSearch,
        },
        edge_floor: None,
        top_members: &[],
        use_indicator: false,
        prune: cfg.prune,
        translate: None,
    };
    let mut st = TaskState::new(sink.is_collecting());
    st.prefix.extend_from_slice(prefix);
    recurse(&ctx, &mut st, set.verts(), &[], c, 1);
    stats.absorb(&st.stats);
    sink.absorb(st.sink);
}

/// Clique listing over a graph oriented by a (degeneracy-style) vertex
/// order: loops in parallel over the edges whose community is large enough
/// to support a k-clique and searches each community. Every k-clique is
/// found exactly once, at the edge joining its first and last vertex.
#[allow(clippy::too_many_arguments)]
pub fn run_degeneracy(
    dag: &OrientedGraph,
    store: &CommunityStore,
    probe: &EdgeProbe,
    k: usize,
    cfg: &SearchConfig,
    sink: &mut CliqueSink,
    stats: &mut SearchStats,
) -> Result<u64> {
    if k < 1 {
        return Err(Error::Param(format!("k must be at least 1, got {k}")));
    }
    if k <= 2 {
        return Ok(direct_small_k(dag.graph(), k, sink, stats));
    }
    let c = k - 2;
    let use_indicator = resolve_indicator(cfg.intersect, probe);
    let collect = sink.is_collecting();
    let rank = dag.order().ranks();
    let result = (0..dag.edge_count())
        .into_par_iter()
        .fold(
            || TaskState::new(collect),
            |mut st, e| {
                if store.size(e) < c {
                    return st;
                }
                let members = store.community(e);
                let pos: Vec<u32> = (0..members.len() as u32).collect();
                let ctx = SearchCtx {
                    dag,
                    store,
                    rank,
                    probe: match probe {
                        EdgeProbe::Hash(set) => ProbeView::Hash(set),
                        EdgeProbe::Matrices(mat) => ProbeView::Matrix { mat, top: e },
                    },
                    edge_floor: None,
                    top_members: members,
                    use_indicator,
                    prune: cfg.prune,
                    translate: None,
                };
                let (u, v) = dag.edge_endpoints(e);
                st.cache.clear();
                st.prefix.clear();
                st.prefix.push(u);
                st.prefix.push(v);
                recurse(&ctx, &mut st, members, &pos, c, 1);
                st
            },
        )
        .reduce(|| TaskState::new(collect), TaskState::merge);
    stats.absorb(&result.stats);
    let found = result.sink.count();
    sink.absorb(result.sink);
    Ok(found)
}

/// Clique listing driven by a total order on the edges: the graph is
/// oriented by vertex id, and each edge searches the community it has among
/// strictly later edges only. Probes and community members below the task
/// edge's rank are rejected, so every k-clique is reported exactly once, at
/// its lowest edge in the order.
pub fn run_commdeg(
    g: &Graph,
    edge_order: &EdgeOrder,
    k: usize,
    cfg: &SearchConfig,
    sink: &mut CliqueSink,
    stats: &mut SearchStats,
) -> Result<u64> {
    if k < 3 {
        return Err(Error::Param(format!(
            "edge-order search requires k >= 3, got {k}"
        )));
    }
    if edge_order.len() != g.m() {
        return Err(Error::Dimension(format!(
            "edge order covers {} edges, graph has {}",
            edge_order.len(),
            g.m()
        )));
    }
    let dag = orient(g, &VertexOrder::identity(g.n()))?;
    let store = build_communities(&dag);
    let c = k - 2;
    let collect = sink.is_collecting();
    let rank = dag.order().ranks();
    let result = (0..dag.edge_count())
        .into_par_iter()
        .fold(
            || TaskState::new(collect),
            |mut st, e| {
                let candidates = crate::community::restricted_community(&dag, e, edge_order);
                if candidates.len() < c {
                    return st;
                }
                let ctx = SearchCtx {
                    dag: &dag,
                    store: &store,
                    rank,
                    probe: ProbeView::BinSearch,
                    edge_floor: Some((edge_order, edge_order.rank(e))),
                    top_members: &[],
                    use_indicator: false,
                    prune: cfg.prune,
                    translate: None,
                };
                let (u, v) = dag.edge_endpoints(e);
                st.prefix.clear();
                st.prefix.push(u);
                st.prefix.push(v);
                recurse(&ctx, &mut st, &candidates, &[], c, 1);
                st
            },
        )
        .reduce(|| TaskState::new(collect), TaskState::merge);
    stats.absorb(&result.stats);
    let found = result.sink.count();
    sink.absorb(result.sink);
    Ok(found)
}

/// Hybrid driver: orient by an approximate degeneracy order, then for each
/// vertex re-orient the subgraph induced by its out-neighbors with an exact
/// degeneracy order and search it for (k-1)-cliques, prepending the vertex.
pub fn run_hybrid(
    g: &Graph,
    k: usize,
    eps: f64,
    cfg: &SearchConfig,
    sink: &mut CliqueSink,
    stats: &mut SearchStats,
) -> Result<u64> {
    if k < 2 {
        return Err(Error::Param(format!(
            "hybrid search requires k >= 2, got {k}"
        )));
    }
    if k == 2 {
        return Ok(direct_small_k(g, k, sink, stats));
    }
    let approx = approx_degeneracy_order(g, eps)?;
    let dag = orient(g, &approx.order)?;
    let collect = sink.is_collecting();
    let result = (0..g.n())
        .into_par_iter()
        .fold(
            || TaskState::new(collect),
            |mut st, v| {
                let outs = dag.out(v);
                if outs.len() < k - 1 {
                    return st;
                }
                let induced = induced_subgraph(&dag, outs);
                let sub_g = induced.dag.graph();
                let sub_order = degeneracy_order(sub_g);
                let sub_dag = orient(sub_g, &sub_order.order).expect("order fits subgraph");
                let sub_store = build_communities(&sub_dag);
                let mut edge_set = HashSet::with_capacity(sub_dag.edge_count());
                for e in 0..sub_dag.edge_count() {
                    let (a, b) = sub_dag.edge_endpoints(e);
                    edge_set.insert((a as u32, b as u32));
                }
                let ctx = SearchCtx {
                    dag: &sub_dag,
                    store: &sub_store,
                    rank: sub_dag.order().ranks(),
                    probe: ProbeView::Hash(&edge_set),
                    edge_floor: None,
                    top_members: &[],
                    use_indicator: false,
                    prune: cfg.prune,
                    translate: Some(&induced.to_parent),
                };
                let candidates = sub_order.order.sequence().to_vec();
                st.cache.clear();
                st.prefix.clear();
                st.prefix.push(v);
                // Depth starts at 0: this call stands in for the per-edge
                // outer loop of the community driver.
                recurse(&ctx, &mut st, &candidates, &[], k - 1, 0);
                st
            },
        )
        .reduce(|| TaskState::new(collect), TaskState::merge);
    stats.absorb(&result.stats);
    let found = result.sink.count();
    sink.absorb(result.sink);
    Ok(found)
}

/// The five preprocessing strategies the engine offers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Degeneracy,
    ApproxDegeneracy,
    Hybrid,
    CommDeg,
    ApproxCommDeg,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] = [
        OrderKind::Degeneracy,
        OrderKind::ApproxDegeneracy,
        OrderKind::Hybrid,
        OrderKind::CommDeg,
        OrderKind::ApproxCommDeg,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Degeneracy => "degeneracy",
            OrderKind::ApproxDegeneracy => "approx-degeneracy",
            OrderKind::Hybrid => "hybrid",
            OrderKind::CommDeg => "commdeg",
            OrderKind::ApproxCommDeg => "approx-commdeg",
        }
    }
}

impl std::fmt::Display for OrderKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything a full run produces: the count, work counters, and the
/// quality statistic of the chosen order (`s`, achieved out-degree bound,
/// or sigma).
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub count: u64,
    pub stats: SearchStats,
    pub order: OrderKind,
    pub order_stat_name: &'static str,
    pub order_stat: usize,
    pub elapsed_ms: f64,
}

/// Runs the whole pipeline for one order strategy: compute the order, build
/// the preprocessing the driver needs, and search. `k = 1` and `k = 2` are
/// answered directly (n and m) under every strategy.
pub fn run_pipeline(
    g: &Graph,
    k: usize,
    kind: OrderKind,
    eps: f64,
    cfg: &SearchConfig,
    sink: &mut CliqueSink,
) -> Result<RunOutput> {
    if k < 1 {
        return Err(Error::Param(format!("k must be at least 1, got {k}")));
    }
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let (count, stat_name, stat) = match kind {
        OrderKind::Degeneracy => {
            let d = degeneracy_order(g);
            let count = if k <= 2 {
                direct_small_k(g, k, sink, &mut stats)
            } else {
                let dag = orient(g, &d.order)?;
                let store = build_communities(&dag);
                let probe = build_probe(&dag, &store, store.max_size());
                run_degeneracy(&dag, &store, &probe, k, cfg, sink, &mut stats)?
            };
            (count, "s", d.s)
        }
        OrderKind::ApproxDegeneracy => {
            let d = approx_degeneracy_order(g, eps)?;
            let count = if k <= 2 {
                direct_small_k(g, k, sink, &mut stats)
            } else {
                let dag = orient(g, &d.order)?;
                let store = build_communities(&dag);
                let probe = build_probe(&dag, &store, store.max_size());
                run_degeneracy(&dag, &store, &probe, k, cfg, sink, &mut stats)?
            };
            (count, "max_out_degree", d.s)
        }
        OrderKind::Hybrid => {
            let d = approx_degeneracy_order(g, eps)?;
            let count = if k <= 2 {
                direct_small_k(g, k, sink, &mut stats)
            } else {
                run_hybrid(g, k, eps, cfg, sink, &mut stats)?
            };
            (count, "max_out_degree", d.s)
        }
        OrderKind::CommDeg => {
            let r = commdeg_order_greedy(g);
            let count = if k <= 2 {
                direct_small_k(g, k, sink, &mut stats)
            } else {
                run_commdeg(g, &r.edge_order, k, cfg, sink, &mut stats)?
            };
            (count, "sigma", r.sigma)
        }
        OrderKind::ApproxCommDeg => {
            let r = approx_commdeg_order(g, eps)?;
            let count = if k <= 2 {
                direct_small_k(g, k, sink, &mut stats)
            } else {
                run_commdeg(g, &r.edge_order, k, cfg, sink, &mut stats)?
            };
            (count, "sigma_bound", r.sigma)
        }
    };
    Ok(RunOutput {
        count,
        stats,
        order: kind,
        order_stat_name: stat_name,
        order_stat: stat,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
