//! Level-difference filtering.
//!
//! When an edge `uv` is inserted, the distances from a source `s` change iff
//! `|d(s,u) - d(s,v)| > 1` in the graph *without* `uv`. The same test decides
//! deletions, again measured in the graph without `uv` (i.e. after the
//! deletion). A source that reaches exactly one of the endpoints always needs
//! an update; a source that reaches neither never does.

use std::fmt;

use crate::graph::{sssp_distances, Adjacency, SsspMode, VertexId, UNREACHABLE};

/// Where a source sits relative to the two endpoints of the changed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelCase {
    EqualLevels,
    AdjacentLevels,
    FarLevels,
    OneSideUnreachable,
    BothUnreachable,
}

impl LevelCase {
    pub const ALL: [LevelCase; 5] = [
        LevelCase::EqualLevels,
        LevelCase::AdjacentLevels,
        LevelCase::FarLevels,
        LevelCase::OneSideUnreachable,
        LevelCase::BothUnreachable,
    ];

    pub fn needs_update(self) -> bool {
        matches!(self, LevelCase::FarLevels | LevelCase::OneSideUnreachable)
    }

    pub fn label(self) -> &'static str {
        match self {
            LevelCase::EqualLevels => "equal",
            LevelCase::AdjacentLevels => "adjacent",
            LevelCase::FarLevels => "far",
            LevelCase::OneSideUnreachable => "one_side_unreachable",
            LevelCase::BothUnreachable => "both_unreachable",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for LevelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classifies a source from its distances to the two endpoints.
pub fn classify_source(du: u32, dv: u32) -> LevelCase {
    match (du == UNREACHABLE, dv == UNREACHABLE) {
        (true, true) => LevelCase::BothUnreachable,
        (true, false) | (false, true) => LevelCase::OneSideUnreachable,
        (false, false) => match du.abs_diff(dv) {
            0 => LevelCase::EqualLevels,
            1 => LevelCase::AdjacentLevels,
            _ => LevelCase::FarLevels,
        },
    }
}

/// The scope vertices whose farness can change when `uv` is inserted into /
/// deleted from `g`. `g` must not contain `uv`.
pub fn filter_sources<G: Adjacency + ?Sized>(
    g: &G,
    u: VertexId,
    v: VertexId,
    scope: &[VertexId],
) -> Vec<VertexId> {
    let du = sssp_distances(g, u, SsspMode::TopDown);
    let dv = sssp_distances(g, v, SsspMode::TopDown);
    scope
        .iter()
        .copied()
        .filter(|&s| classify_source(du[s as usize], dv[s as usize]).needs_update())
        .collect()
}

/// Counts of [`LevelCase`] over a set of sources.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CaseHistogram {
    counts: [u64; 5],
}

impl CaseHistogram {
    pub fn record(&mut self, case: LevelCase) {
        self.counts[case.index()] += 1;
    }

    pub fn get(&self, case: LevelCase) -> u64 {
        self.counts[case.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn needing_update(&self) -> u64 {
        self.get(LevelCase::FarLevels) + self.get(LevelCase::OneSideUnreachable)
    }

    pub fn merge(&mut self, other: &CaseHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (LevelCase, u64)> + '_ {
        LevelCase::ALL.into_iter().map(|c| (c, self.get(c)))
    }
}

/// Histogram of the level cases over every vertex of `g` (which must not contain `uv`).
pub fn case_distribution<G: Adjacency + ?Sized>(g: &G, u: VertexId, v: VertexId) -> CaseHistogram {
    let du = sssp_distances(g, u, SsspMode::TopDown);
    let dv = sssp_distances(g, v, SsspMode::TopDown);
    let mut hist = CaseHistogram::default();
    for (a, b) in du.into_iter().zip(dv) {
        hist.record(classify_source(a, b));
    }
    hist
}
