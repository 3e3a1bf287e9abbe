//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::collections::HashSet;
use std::time::Instant;

use common::{corpus, k6_minus_edge, mid_size_graph, pool_with, single_thread_pool};
use kclique::community::{count_triangles, restricted_community};
use kclique::graph::{orient, VertexOrder};
use kclique::listing::{
    relevant_pairs, run_pipeline, CandidateSet, CliqueSink, OrderKind, SearchConfig,
};
use kclique::ordering::{approx_commdeg_order, approx_degeneracy_order, commdeg_order_greedy,
    degeneracy_order};
use kclique::{gen, oracle};

const EPS: f64 = 0.5;

fn criterion(n: usize, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("criterion {n}: PASS — {detail}"),
        Err(detail) => {
            println!("criterion {n}: FAIL — {detail}");
            panic!("criterion {n}: {detail}");
        }
    }
}

fn count(g: &kclique::graph::Graph, k: usize, kind: OrderKind) -> u64 {
    let mut sink = CliqueSink::counting();
    run_pipeline(g, k, kind, EPS, &SearchConfig::new(), &mut sink)
        .expect("pipeline")
        .count
}

#[test]
fn criterion_1_golden_near_clique() {
    criterion(1, || {
        let g = k6_minus_edge();
        let start = Instant::now();
        for kind in OrderKind::ALL {
            let five = count(&g, 5, kind);
            if five != 2 {
                return Err(format!("{kind}: k=5 counted {five}, expected 2"));
            }
            let six = count(&g, 6, kind);
            if six != 0 {
                return Err(format!("{kind}: k=6 counted {six}, expected 0"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return Err(format!("took {elapsed:?}, budget 1 s"));
        }
        Ok(format!(
            "k=5 -> 2 and k=6 -> 0 under all five orders in {elapsed:?}"
        ))
    });
}

#[test]
#[allow(clippy::needless_range_loop)]
fn criterion_2_oracle_equivalence() {
    criterion(2, || {
        let graphs = corpus();
        let pool = single_thread_pool();
        let start = Instant::now();
        let mut runs = 0u64;
        pool.install(|| -> Result<(), String> {
            for (i, g) in graphs.iter().enumerate() {
                let expect = oracle::brute_force_clique_counts(g)
                    .map_err(|e| format!("oracle: {e}"))?;
                for k in 3..=g.n() {
                    for kind in OrderKind::ALL {
                        let got = count(g, k, kind);
                        runs += 1;
                        if got != expect[k] {
                            return Err(format!(
                                "graph {i} (n={}, m={}), k={k}, {kind}: engine {got} != oracle {}",
                                g.n(),
                                g.m(),
                                expect[k]
                            ));
                        }
                    }
                }
            }
            Ok(())
        })?;
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 300.0 {
            return Err(format!("took {elapsed:?}, budget 5 min"));
        }
        Ok(format!(
            "200 graphs, every k in [3, n], all five orders: {runs} exact matches in {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_3_structural_facts() {
    criterion(3, || {
        if degeneracy_order(&gen::star(9)).s != 1 {
            return Err("star should be 1-degenerate".into());
        }
        for d in [3u32, 4] {
            let q = gen::hypercube(d);
            let s = degeneracy_order(&q).s;
            let sigma = commdeg_order_greedy(&q).sigma;
            if s != d as usize || sigma != 0 {
                return Err(format!("Q{d}: s={s} sigma={sigma}, expected s={d} sigma=0"));
            }
        }
        let mut named: Vec<kclique::graph::Graph> =
            vec![k6_minus_edge(), gen::complete(6), gen::star(5), gen::hypercube(3)];
        named.extend(corpus());
        let mut checked = 0;
        for (i, g) in named.iter().enumerate() {
            let sigma = commdeg_order_greedy(g).sigma;
            let t = count_triangles(g);
            if t > (sigma * g.m()) as u64 {
                return Err(format!("graph {i}: T={t} exceeds sigma*m={}", sigma * g.m()));
            }
            if g.m() > 0 {
                let s = degeneracy_order(g).s;
                if sigma >= s {
                    return Err(format!("graph {i}: sigma={sigma} not below s={s}"));
                }
                checked += 1;
            }
        }
        Ok(format!(
            "star/hypercube facts hold; sigma < s and T <= sigma*m on {checked} non-edgeless graphs"
        ))
    });
}

#[test]
fn criterion_4_relevant_pair_closed_form() {
    criterion(4, || {
        let mut checked = 0;
        for len in 1..=60usize {
            let set = CandidateSet::from_rank_sorted((0..len).collect());
            let ranks: Vec<usize> = (0..len).collect();
            for c in 0..=12usize {
                let expect = if len > c + 1 {
                    ((len - c) * (len - c - 1) / 2) as u64
                } else {
                    0
                };
                let iterated = relevant_pairs(&set, c).count() as u64;
                let scanned = oracle::brute_force_relevant_pairs(&ranks, c);
                if iterated != expect || scanned != expect {
                    return Err(format!(
                        "|I|={len} c={c}: iterator {iterated}, scan {scanned}, formula {expect}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("iterator = C(|I|-c, 2) = quadratic scan on {checked} cases"))
    });
}

#[test]
fn criterion_5_approximation_quality() {
    criterion(5, || {
        let graphs: Vec<_> = corpus().into_iter().take(100).collect();
        for (i, g) in graphs.iter().enumerate() {
            let s_exact = degeneracy_order(g).s;
            let approx = approx_degeneracy_order(g, EPS).map_err(|e| e.to_string())?;
            let degree_bound = (2.0 + 2.0 * EPS) * s_exact as f64;
            if approx.s as f64 > degree_bound {
                return Err(format!(
                    "graph {i}: achieved out-degree {} > (2+2eps)*s = {degree_bound}",
                    approx.s
                ));
            }

            let sigma_exact = commdeg_order_greedy(g).sigma;
            let acd = approx_commdeg_order(g, EPS).map_err(|e| e.to_string())?;
            let dag = orient(g, &VertexOrder::identity(g.n())).map_err(|e| e.to_string())?;
            let max_restricted = (0..dag.edge_count())
                .map(|e| restricted_community(&dag, e, &acd.edge_order).len())
                .max()
                .unwrap_or(0);
            let sigma_bound = (3.0 + EPS) * sigma_exact as f64;
            if max_restricted as f64 > sigma_bound {
                return Err(format!(
                    "graph {i}: restricted community {max_restricted} > (3+eps)*sigma = {sigma_bound}"
                ));
            }
            if g.m() > 0 {
                let round_cap = (g.m() as f64).log(1.0 + EPS).ceil() as usize + 1;
                if acd.rounds > round_cap {
                    return Err(format!(
                        "graph {i}: {} rounds > cap {round_cap}",
                        acd.rounds
                    ));
                }
            }
        }
        Ok("degree, community, and round bounds hold on 100 graphs".into())
    });
}

#[test]
fn criterion_6_pruning_monotonicity() {
    criterion(6, || {
        let graphs = corpus();
        let pruned_cfg = SearchConfig::new();
        let unpruned_cfg = SearchConfig {
            prune: false,
            ..SearchConfig::new()
        };
        let mut comparisons = 0u64;
        for (i, g) in graphs.iter().enumerate() {
            for k in 3..=g.n() {
                let mut a_sink = CliqueSink::counting();
                let mut b_sink = CliqueSink::counting();
                let a = run_pipeline(g, k, OrderKind::Degeneracy, EPS, &pruned_cfg, &mut a_sink)
                    .map_err(|e| e.to_string())?;
                let b = run_pipeline(g, k, OrderKind::Degeneracy, EPS, &unpruned_cfg, &mut b_sink)
                    .map_err(|e| e.to_string())?;
                if a.count != b.count {
                    return Err(format!(
                        "graph {i} k={k}: pruned count {} != unpruned {}",
                        a.count, b.count
                    ));
                }
                if a.stats.recursive_calls > b.stats.recursive_calls
                    || a.stats.edge_probes > b.stats.edge_probes
                {
                    return Err(format!(
                        "graph {i} k={k}: pruning increased work ({:?} vs {:?})",
                        a.stats, b.stats
                    ));
                }
                comparisons += 1;
            }
        }
        Ok(format!(
            "counts unchanged, calls and probes monotone over {comparisons} runs"
        ))
    });
}

#[test]
fn criterion_7_parallel_determinism() {
    criterion(7, || {
        let graphs = corpus();
        let thread_counts = [1usize, 2, 4, 8];
        let mut baseline: Vec<Option<u64>> = vec![None; graphs.len()];
        for &t in &thread_counts {
            let pool = pool_with(t);
            pool.install(|| -> Result<(), String> {
                for (i, g) in graphs.iter().enumerate() {
                    let got = count(g, 5, OrderKind::Degeneracy);
                    match baseline[i] {
                        None => baseline[i] = Some(got),
                        Some(expect) if expect != got => {
                            return Err(format!(
                                "graph {i}: count {got} at {t} threads, {expect} at 1"
                            ));
                        }
                        _ => {}
                    }
                }
                Ok(())
            })?;
        }

        let mid = mid_size_graph();
        if mid.m() < 100_000 {
            return Err(format!("mid-size graph has only {} edges", mid.m()));
        }
        let mut mid_counts = Vec::new();
        let mut eight_thread_time = None;
        for &t in &thread_counts {
            let pool = pool_with(t);
            let start = Instant::now();
            let c = pool.install(|| count(&mid, 6, OrderKind::Degeneracy));
            let elapsed = start.elapsed();
            if t == 8 {
                eight_thread_time = Some(elapsed);
            }
            mid_counts.push(c);
        }
        if mid_counts.iter().any(|&c| c != mid_counts[0]) {
            return Err(format!("mid-size counts diverge: {mid_counts:?}"));
        }
        let t8 = eight_thread_time.expect("timed the 8-thread run");
        if t8.as_secs_f64() >= 60.0 {
            return Err(format!("mid-size k=6 run took {t8:?}, budget 60 s"));
        }
        Ok(format!(
            "200 corpus graphs and a {}-edge graph agree across 1/2/4/8 threads; mid-size k=6 \
             count {} in {t8:?} on 8 threads",
            mid.m(),
            mid_counts[0]
        ))
    });
}

#[test]
fn criterion_8_uniqueness() {
    criterion(8, || {
        let mut lists = 0u64;
        let mut check = |g: &kclique::graph::Graph, k: usize, kind: OrderKind| -> Result<(), String> {
            let mut sink = CliqueSink::collecting();
            run_pipeline(g, k, kind, EPS, &SearchConfig::new(), &mut sink)
                .map_err(|e| e.to_string())?;
            let cliques = sink.into_cliques();
            let unique: HashSet<&Vec<usize>> = cliques.iter().collect();
            if unique.len() != cliques.len() {
                return Err(format!(
                    "{kind} k={k}: {} cliques but only {} distinct",
                    cliques.len(),
                    unique.len()
                ));
            }
            lists += 1;
            Ok(())
        };
        let near = k6_minus_edge();
        for kind in OrderKind::ALL {
            check(&near, 5, kind)?;
        }
        for g in corpus() {
            for k in [3usize, 4, 5] {
                for kind in [OrderKind::Degeneracy, OrderKind::CommDeg] {
                    check(&g, k, kind)?;
                }
            }
        }
        Ok(format!("no duplicate cliques across {lists} collected listings"))
    });
}
