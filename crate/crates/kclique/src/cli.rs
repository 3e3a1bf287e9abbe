//! Command-line surface: `count` (with optional listing and oracle
//! verification), `stats`, and `bench`. JSON goes to stdout, bench CSV to a
//! file or stdout. Exit codes: 0 ok, 1 verification mismatch, 2 usage or
//! I/O error.

use std::fs;
use std::io::{BufWriter, Cursor, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::community::{build_communities, count_triangles};
use crate::graph::{load_edge_list, orient, Graph, LoadResult};
use crate::listing::{run_pipeline, CliqueSink, OrderKind, SearchConfig, SearchStats};
use crate::ordering::{commdeg_order_greedy, degeneracy_order};
use crate::{Error, Result};

#[derive(Parser)]
#[command(name = "kclique", version, about = "k-clique counting and listing in sparse graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count (or list) the k-cliques of a graph
    Count(CountArgs),
    /// Print basic structural statistics of a graph
    Stats(StatsArgs),
    /// Run repeated counts across thread counts and clique sizes, emit CSV
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Degeneracy,
    ApproxDegeneracy,
    Hybrid,
    Commdeg,
    ApproxCommdeg,
}

impl From<OrderArg> for OrderKind {
    fn from(a: OrderArg) -> OrderKind {
        match a {
            OrderArg::Degeneracy => OrderKind::Degeneracy,
            OrderArg::ApproxDegeneracy => OrderKind::ApproxDegeneracy,
            OrderArg::Hybrid => OrderKind::Hybrid,
            OrderArg::Commdeg => OrderKind::CommDeg,
            OrderArg::ApproxCommdeg => OrderKind::ApproxCommDeg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Count,
    List,
}

#[derive(Args)]
pub struct CountArgs {
    /// Input graph: whitespace edge list, or a binary cache file
    pub input: PathBuf,
    /// Clique size
    #[arg(short)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Degeneracy)]
    pub order: OrderArg,
    /// Epsilon for the approximate orders
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Worker threads (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// `count` tallies only; `list` also emits one clique per line
    #[arg(long, value_enum, default_value_t = ModeArg::Count)]
    pub mode: ModeArg,
    /// Disable the between-distance pair filter (for instrumentation A/B)
    #[arg(long)]
    pub no_prune: bool,
    /// Cross-check the count against the brute-force oracle (n <= 30)
    #[arg(long)]
    pub verify: bool,
    /// Where listed cliques go (default: stdout, before the JSON line)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct StatsArgs {
    pub input: PathBuf,
}

#[derive(Args)]
pub struct BenchArgs {
    pub input: PathBuf,
    /// Clique sizes, comma separated
    #[arg(short, value_delimiter = ',', required = true)]
    pub k: Vec<usize>,
    /// Thread counts, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub threads: Vec<usize>,
    /// Repetitions per cell; elapsed times are averaged
    #[arg(long, default_value_t = 10)]
    pub reps: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Degeneracy)]
    pub order: OrderArg,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long)]
    pub no_prune: bool,
    /// CSV destination (default: stdout)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses the CLI and runs the selected command, returning the process exit
/// code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => cmd_count(&args),
        Command::Stats(args) => cmd_stats(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::VerifyMismatch(_) => 1,
                _ => 2,
            }
        }
    }
}

/// Reads a graph file, accepting either the binary cache format (detected
/// by its magic bytes) or edge-list text.
pub fn load_graph(path: &Path) -> Result<LoadResult> {
    let bytes = fs::read(path)?;
    if bytes.starts_with(b"KCLQGRPH") {
        let graph = Graph::read_cache(Cursor::new(bytes))?;
        let ids = (0..graph.n() as u64).collect();
        return Ok(LoadResult { graph, ids });
    }
    load_edge_list(Cursor::new(bytes))
}

fn with_pool<T: Send>(threads: Option<u64>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t as usize)
                .build()
                .map_err(|e| Error::Param(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Serialize)]
struct CountReport<'a> {
    command: &'a str,
    k: usize,
    order: &'a str,
    count: u64,
    n: usize,
    m: usize,
    order_stat_name: &'a str,
    order_stat: usize,
    #[serde(flatten)]
    stats: SearchStats,
    elapsed_ms: f64,
    threads: Option<u64>,
    prune: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

pub fn cmd_count(args: &CountArgs) -> Result<i32> {
    let loaded = load_graph(&args.input)?;
    let g = &loaded.graph;
    let cfg = SearchConfig {
        prune: !args.no_prune,
        ..SearchConfig::new()
    };
    let kind: OrderKind = args.order.into();
    let listing = args.mode == ModeArg::List;
    let mut sink = if listing {
        CliqueSink::collecting()
    } else {
        CliqueSink::counting()
    };
    let out = with_pool(args.threads, || {
        run_pipeline(g, args.k, kind, args.epsilon, &cfg, &mut sink)
    })??;

    let mut verified = None;
    if args.verify {
        if g.n() > 30 {
            return Err(Error::Param(format!(
                "--verify refuses graphs with n = {} > 30 vertices",
                g.n()
            )));
        }
        let counts = crate::oracle::brute_force_clique_counts(g)?;
        let expect = counts.get(args.k).copied().unwrap_or(0);
        verified = Some(expect == out.count);
        if expect != out.count {
            let report = CountReport {
                command: "count",
                k: args.k,
                order: out.order.name(),
                count: out.count,
                n: g.n(),
                m: g.m(),
                order_stat_name: out.order_stat_name,
                order_stat: out.order_stat,
                stats: out.stats,
                elapsed_ms: out.elapsed_ms,
                threads: args.threads,
                prune: cfg.prune,
                verified,
            };
            println!("{}", serde_json::to_string(&report)?);
            return Err(Error::VerifyMismatch(format!(
                "engine counted {} but the oracle counted {expect}",
                out.count
            )));
        }
    }

    if listing {
        let mut lines: Vec<Vec<u64>> = sink
            .cliques()
            .iter()
            .map(|c| c.iter().map(|&v| loaded.ids[v]).collect())
            .collect();
        lines.sort();
        let render = |w: &mut dyn Write| -> Result<()> {
            for clique in &lines {
                let text: Vec<String> = clique.iter().map(u64::to_string).collect();
                writeln!(w, "{}", text.join(" "))?;
            }
            Ok(())
        };
        match &args.output {
            Some(path) => {
                let mut w = BufWriter::new(fs::File::create(path)?);
                render(&mut w)?;
            }
            None => render(&mut std::io::stdout().lock())?,
        }
    }

    let report = CountReport {
        command: "count",
        k: args.k,
        order: out.order.name(),
        count: out.count,
        n: g.n(),
        m: g.m(),
        order_stat_name: out.order_stat_name,
        order_stat: out.order_stat,
        stats: out.stats,
        elapsed_ms: out.elapsed_ms,
        threads: args.threads,
        prune: cfg.prune,
        verified,
    };
    println!("{}", serde_json::to_string(&report)?);
    Ok(0)
}

#[derive(Serialize)]
struct StatsReport {
    n: usize,
    m: usize,
    #[serde(rename = "T")]
    triangles: u64,
    s: usize,
    sigma: usize,
    max_community: usize,
}

pub fn cmd_stats(args: &StatsArgs) -> Result<i32> {
    let loaded = load_graph(&args.input)?;
    let g = &loaded.graph;
    let deg = degeneracy_order(g);
    let dag = orient(g, &deg.order)?;
    let store = build_communities(&dag);
    let report = StatsReport {
        n: g.n(),
        m: g.m(),
        triangles: count_triangles(g),
        s: deg.s,
        sigma: commdeg_order_greedy(g).sigma,
        max_community: store.max_size(),
    };
    println!("{}", serde_json::to_string(&report)?);
    Ok(0)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<i32> {
    let loaded = load_graph(&args.input)?;
    let g = &loaded.graph;
    let reps = args.reps.max(1);
    let cfg = SearchConfig {
        prune: !args.no_prune,
        ..SearchConfig::new()
    };
    let kind: OrderKind = args.order.into();
    let stem = args
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| args.input.display().to_string());

    let mut rows = Vec::new();
    for &k in &args.k {
        let mut count_across_threads: Option<u64> = None;
        for &threads in &args.threads {
            if threads == 0 {
                return Err(Error::Param("thread count must be at least 1".into()));
            }
            let mut elapsed_total = 0.0;
            let mut last = None;
            for _ in 0..reps {
                let mut sink = CliqueSink::counting();
                let out = with_pool(Some(threads as u64), || {
                    run_pipeline(g, k, kind, args.epsilon, &cfg, &mut sink)
                })??;
                elapsed_total += out.elapsed_ms;
                if let Some(prev) = &last {
                    let (prev_count, _): &(u64, SearchStats) = prev;
                    if *prev_count != out.count {
                        return Err(Error::VerifyMismatch(format!(
                            "count changed between repetitions at k={k}"
                        )));
                    }
                }
                last = Some((out.count, out.stats));
            }
            let (count, stats) = last.expect("at least one repetition");
            match count_across_threads {
                None => count_across_threads = Some(count),
                Some(expect) if expect != count => {
                    return Err(Error::VerifyMismatch(format!(
                        "count at k={k} differs between thread settings"
                    )));
                }
                _ => {}
            }
            rows.push(format!(
                "{stem},{},{k},{threads},{count},{:.3},{},{}",
                kind.name(),
                elapsed_total / reps as f64,
                stats.recursive_calls,
                stats.edge_probes,
            ));
        }
    }

    let render = |w: &mut dyn Write| -> Result<()> {
        writeln!(w, "graph,order,k,threads,count,elapsed_ms,recursive_calls,probes")?;
        for row in &rows {
            writeln!(w, "{row}")?;
        }
        Ok(())
    };
    match &args.output {
        Some(path) => {
            let mut w = BufWriter::new(fs::File::create(path)?);
            render(&mut w)?;
        }
        None => render(&mut std::io::stdout().lock())?,
    }
    Ok(0)
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Error {
        Error::Param(format!("json: {e}"))
    }
}
