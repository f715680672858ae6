//! Graph and workload statistics: distance distributions, level-case
//! histograms and per-event update times.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::sssp::{BfsWorkspace, SsspMode};
use crate::graph::{Adjacency, VertexId};
use crate::level::CaseHistogram;

/// Everything `write_stats` knows how to print.
#[derive(Clone, Debug, Default)]
pub struct StatsBundle {
    /// Number of ordered pairs `(s, t)`, `s != t`, at each finite distance.
    pub distance_distribution: BTreeMap<u32, u64>,
    pub case_distribution: CaseHistogram,
    pub update_times: Vec<Duration>,
}

/// Pair counts per finite distance, over all sources or over `samples`
/// distinct sources drawn with `seed`.
pub fn distance_distribution<G: Adjacency + ?Sized>(g: &G, samples: Option<usize>, seed: u64) -> BTreeMap<u32, u64> {
    let n = g.vertex_count();
    let sources: Vec<VertexId> = match samples {
        Some(k) if k < n => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<VertexId> = rand::seq::index::sample(&mut rng, n, k)
                .into_iter()
                .map(|i| i as VertexId)
                .collect();
            picked.sort_unstable();
            picked
        }
        _ => (0..n as VertexId).collect(),
    };
    let mut ws = BfsWorkspace::new(n);
    let mut hist = BTreeMap::new();
    for s in sources {
        ws.run(g, s, SsspMode::TopDown, 1.0);
        for &w in ws.visited() {
            if w != s {
                *hist.entry(ws.distances()[w as usize]).or_insert(0) += 1;
            }
        }
    }
    hist
}

/// Writes the bundle as `histogram,bucket,count` rows. Update times are
/// sorted ascending and listed by rank in microseconds.
pub fn write_stats<W: Write>(bundle: &StatsBundle, mut w: W) -> std::io::Result<()> {
    writeln!(w, "histogram,bucket,count")?;
    for (d, c) in &bundle.distance_distribution {
        writeln!(w, "distance,{d},{c}")?;
    }
    if bundle.case_distribution.total() > 0 {
        for (case, c) in bundle.case_distribution.iter() {
            writeln!(w, "level_case,{},{c}", case.label())?;
        }
    }
    let mut times: Vec<u128> = bundle.update_times.iter().map(Duration::as_micros).collect();
    times.sort_unstable();
    for (rank, t) in times.iter().enumerate() {
        writeln!(w, "update_time_us,{rank},{t}")?;
    }
    Ok(())
}
