use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use dyncc::closeness::closeness_all_with;
use dyncc::experiment::prepare_random_experiment;
use dyncc::io::{read_edge_list, read_edge_list_relabeled, read_event_stream, write_centrality_csv, write_file};
use dyncc::level::case_distribution;
use dyncc::stats::{distance_distribution, write_stats, StatsBundle};
use dyncc::{CaseHistogram, CentralityState, CsrGraph, DynamicGraph, Engine, EngineConfig, Error, SsspMode, UpdateReport};

/// Exact closeness centrality for graphs that change edge by edge.
#[derive(Parser)]
#[command(name = "dyncc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closeness of every vertex from scratch.
    Compute {
        graph: PathBuf,
        /// Switch between top-down and bottom-up expansion per level.
        #[arg(long)]
        hybrid: bool,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write `vertex,far,closeness` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat ids as arbitrary labels, number them densely, and write the
        /// `internal external` mapping to this file.
        #[arg(long, value_name = "MAP")]
        relabel: Option<PathBuf>,
    },
    /// Replay an insert/delete stream, keeping closeness current.
    Stream {
        graph: PathBuf,
        events: PathBuf,
        /// cc, b, bl, bli or blih (ablations such as `l` are accepted too).
        #[arg(long, default_value = "blih")]
        config: EngineConfig,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Per-event work and timing as CSV.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Final centrality as CSV (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute from scratch after every event and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Remove random non-bridge edges, then time their reinsertion per configuration.
    Bench {
        graph: PathBuf,
        #[arg(long, default_value_t = 100)]
        random_k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "b,bl,bli,blih")]
        configs: Vec<EngineConfig>,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance or level-case histograms.
    Stats {
        kind: StatsKind,
        graph: PathBuf,
        /// Sources sampled for `dist` (all when omitted).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// For `cases`: classify against this edge only. Without it, the
        /// random reinsertion protocol is replayed.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<u32>>,
        /// For `cases` without `--edge`: number of reinserted edges.
        #[arg(long, default_value_t = 100)]
        random_k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsKind {
    Dist,
    Cases,
}

enum Failure {
    Input(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compute {
            graph,
            hybrid,
            alpha,
            threads,
            out,
            relabel,
        } => {
            let g = match &relabel {
                Some(map) => {
                    let (g, stats, external) = read_edge_list_relabeled(&graph)?;
                    warn_skipped(&graph, stats.duplicates, stats.self_loops);
                    write_file(map, |w| {
                        writeln!(w, "internal external")?;
                        external.iter().enumerate().try_for_each(|(i, x)| writeln!(w, "{i} {x}"))
                    })?;
                    g
                }
                None => load_graph(&graph)?,
            };
            let mode = if hybrid { SsspMode::Hybrid } else { SsspMode::TopDown };
            let state = closeness_all_with(&g.to_csr(), mode, alpha, threads);
            emit(out.as_deref(), |w| write_centrality_csv(&state, w))?;
        }
        Command::Stream {
            graph,
            events,
            config,
            alpha,
            threads,
            report,
            out,
            verify,
        } => {
            let g = load_graph(&graph)?;
            let events = read_event_stream(&events)?;
            let mut engine = Engine::new(g, config.with_alpha(alpha).with_threads(threads));
            let mut reports = Vec::with_capacity(events.len());
            for (index, event) in events.iter().enumerate() {
                let r = engine.apply(event).map_err(|e| Error::Event {
                    index,
                    source: Box::new(e),
                })?;
                reports.push(r);
                if verify {
                    let expected = reference(engine.graph());
                    if &expected != engine.state() {
                        let v = (0..expected.len())
                            .find(|&v| expected.far()[v] != engine.far()[v] || expected.reach()[v] != engine.state().reach()[v])
                            .unwrap_or(0);
                        return Err(Failure::Verification(format!(
                            "after event {index} ({event}): vertex {v} has far {} but recomputation gives {}",
                            engine.far()[v],
                            expected.far()[v]
                        )));
                    }
                }
            }
            if let Some(path) = report {
                write_file(&path, |w| write_report(&reports, w))?;
            }
            emit(out.as_deref(), |w| write_centrality_csv(engine.state(), w))?;
        }
        Command::Bench {
            graph,
            random_k,
            seed,
            configs,
            alpha,
            threads,
            out,
        } => {
            let g = load_graph(&graph)?;
            let (base, events) = prepare_random_experiment(&g, random_k, seed)?;
            let start = Instant::now();
            closeness_all_with(&g.to_csr(), SsspMode::TopDown, alpha, threads);
            let scratch = start.elapsed();
            let mut rows = Vec::new();
            for cfg in configs {
                let mut engine = Engine::new(base.clone(), cfg.with_alpha(alpha).with_threads(threads));
                let reports = engine.process_stream(&events)?;
                rows.push(BenchRow::new(cfg, &reports, g.vertex_count(), scratch));
            }
            emit(out.as_deref(), |w| write_bench(&rows, w))?;
        }
        Command::Stats {
            kind,
            graph,
            samples,
            seed,
            edge,
            random_k,
            out,
        } => {
            let g = load_graph(&graph)?;
            let mut bundle = StatsBundle::default();
            match kind {
                StatsKind::Dist => bundle.distance_distribution = distance_distribution(&g.to_csr(), samples, seed),
                StatsKind::Cases => bundle.case_distribution = level_cases(&g, edge, random_k, seed)?,
            }
            emit(out.as_deref(), |w| write_stats(&bundle, w))?;
        }
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<DynamicGraph, Error> {
    let (g, stats) = read_edge_list(path)?;
    warn_skipped(path, stats.duplicates, stats.self_loops);
    Ok(g)
}

fn warn_skipped(path: &Path, duplicates: usize, self_loops: usize) {
    if duplicates + self_loops > 0 {
        eprintln!(
            "warning: {}: skipped {duplicates} duplicate edge(s) and {self_loops} self-loop(s)",
            path.display()
        );
    }
}

#[cfg(feature = "oracle")]
fn reference(g: &DynamicGraph) -> CentralityState {
    dyncc::oracle::oracle_closeness(g)
}

#[cfg(not(feature = "oracle"))]
fn reference(g: &DynamicGraph) -> CentralityState {
    dyncc::closeness_all(g, SsspMode::TopDown)
}

fn emit<F>(path: Option<&Path>, body: F) -> Result<(), Error>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(p) => write_file(p, |w| body(w)),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w).and_then(|_| w.flush()).map_err(Error::from)
        }
    }
}

fn level_cases(g: &DynamicGraph, edge: Option<Vec<u32>>, k: usize, seed: u64) -> Result<CaseHistogram, Error> {
    if let Some(pair) = edge {
        let (u, v) = (pair[0], pair[1]);
        let n = g.vertex_count();
        for id in [u, v] {
            if id as usize >= n {
                return Err(Error::VertexOutOfRange { id, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        // both directions are judged on the graph without the edge
        let csr = if g.has_edge(u, v) {
            g.to_csr().without_edge(u, v)
        } else {
            g.to_csr()
        };
        return Ok(case_distribution(&csr, u, v));
    }
    let (mut current, events) = prepare_random_experiment(g, k, seed)?;
    let mut hist = CaseHistogram::default();
    for e in &events {
        hist.merge(&case_distribution(&CsrGraph::from_adjacency(&current), e.u, e.v));
        current.add_edge(e.u, e.v)?;
    }
    Ok(hist)
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn write_report(reports: &[UpdateReport], w: &mut dyn Write) -> io::Result<()> {
    writeln!(
        w,
        "index,op,u,v,timestamp,sources_total,skipped_level,skipped_identical,sssp_count,fix_count,bcd_rebuilt,filter_ms,update_ms"
    )?;
    for (i, r) in reports.iter().enumerate() {
        let e = &r.event;
        let ts = e.timestamp.map(|t| t.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{i},{},{},{},{ts},{},{},{},{},{},{},{:.3},{:.3}",
            e.op.symbol(),
            e.u,
            e.v,
            r.sources_total,
            r.sources_skipped_level,
            r.sources_skipped_identical,
            r.sssp_count,
            r.fix_count,
            r.bcd_rebuilt,
            ms(r.filter_time),
            ms(r.update_time)
        )?;
    }
    Ok(())
}

struct BenchRow {
    config: String,
    updates: usize,
    mean_sssp: f64,
    sssp_fraction: f64,
    mean_skipped_level: f64,
    mean_skipped_identical: f64,
    fixes: usize,
    rebuilds: usize,
    mean_ms: f64,
    p50_ms: f64,
    p90_ms: f64,
    p99_ms: f64,
    scratch_ms: f64,
}

impl BenchRow {
    fn new(cfg: EngineConfig, reports: &[UpdateReport], n: usize, scratch: Duration) -> Self {
        let k = reports.len().max(1) as f64;
        let mean = |f: fn(&UpdateReport) -> usize| reports.iter().map(f).sum::<usize>() as f64 / k;
        let mut times: Vec<f64> = reports.iter().map(|r| ms(r.total_time())).collect();
        times.sort_by(f64::total_cmp);
        let pct = |p: f64| -> f64 {
            if times.is_empty() {
                return 0.0;
            }
            let idx = ((p * times.len() as f64).ceil() as usize).clamp(1, times.len()) - 1;
            times[idx]
        };
        let mean_sssp = mean(|r| r.sssp_count);
        BenchRow {
            config: cfg.name(),
            updates: reports.len(),
            mean_sssp,
            sssp_fraction: if n == 0 { 0.0 } else { mean_sssp / n as f64 },
            mean_skipped_level: mean(|r| r.sources_skipped_level),
            mean_skipped_identical: mean(|r| r.sources_skipped_identical),
            fixes: reports.iter().map(|r| r.fix_count).sum(),
            rebuilds: reports.iter().filter(|r| r.bcd_rebuilt).count(),
            mean_ms: times.iter().sum::<f64>() / k,
            p50_ms: pct(0.5),
            p90_ms: pct(0.9),
            p99_ms: pct(0.99),
            scratch_ms: ms(scratch),
        }
    }
}

/// Timing columns end in `_ms` or are named `speedup`; everything else is
/// deterministic for a fixed seed.
fn write_bench(rows: &[BenchRow], w: &mut dyn Write) -> io::Result<()> {
    writeln!(
        w,
        "config,updates,mean_sssp,sssp_fraction,mean_skipped_level,mean_skipped_identical,fixes,bcd_rebuilds,mean_ms,p50_ms,p90_ms,p99_ms,scratch_ms,speedup"
    )?;
    for r in rows {
        let speedup = if r.mean_ms > 0.0 { r.scratch_ms / r.mean_ms } else { 0.0 };
        writeln!(
            w,
            "{},{},{:.3},{:.6},{:.3},{:.3},{},{},{:.3},{:.3},{:.3},{:.3},{:.3},{:.2}",
            r.config,
            r.updates,
            r.mean_sssp,
            r.sssp_fraction,
            r.mean_skipped_level,
            r.mean_skipped_identical,
            r.fixes,
            r.rebuilds,
            r.mean_ms,
            r.p50_ms,
            r.p90_ms,
            r.p99_ms,
            r.scratch_ms,
            speedup
        )?;
    }
    Ok(())
}
