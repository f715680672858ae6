//! Incremental maintenance of farness under single-edge insertions and deletions.
//!
//! Each update runs in three steps:
//!
//! 1. **Scope.** With biconnected decomposition enabled, only the block that
//!    contains the changed edge is searched; vertices hanging off the block are
//!    folded into their representatives' `R`/`RF` weights. Otherwise the whole
//!    graph is the scope.
//! 2. **Filter.** Two searches from the edge endpoints (in the graph without
//!    the edge) discard every source whose endpoint distances differ by at most
//!    one. Survivors are then deduplicated by identical-vertex class.
//! 3. **Update and fix.** Each remaining source runs one weighted search of the
//!    scope. Vertices outside the scope shift by their representative's change.
//!
//! Farness is kept as exact integers, so any configuration can be checked
//! against a from-scratch computation with zero tolerance.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bcd::{build_representatives, decompose, BcdPartition, RepInfo};
use crate::closeness::{closeness_all_with, farness_of_visited, CentralityState};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, BfsWorkspace, CsrGraph, DynamicGraph, SsspMode, VertexId};
use crate::identical::{IdenticalClasses, IdentityKind};
use crate::io::{EdgeEvent, EdgeOp};
use crate::level::classify_source;

/// Which work filters are active.
///
/// The named configurations are flag prefixes: `cc` (none), `b` (blocks),
/// `bl` (+ level filter), `bli` (+ identical vertices), `blih` (+ hybrid searches).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EngineConfig {
    pub use_bcd: bool,
    pub use_levels: bool,
    pub use_identical: bool,
    pub use_hybrid: bool,
    /// Hybrid switching ratio, see [`crate::graph::choose_direction`].
    pub alpha: f64,
    /// Threads for the per-source searches; `1` runs inline.
    pub threads: usize,
}

impl EngineConfig {
    const fn flags(use_bcd: bool, use_levels: bool, use_identical: bool, use_hybrid: bool) -> Self {
        EngineConfig {
            use_bcd,
            use_levels,
            use_identical,
            use_hybrid,
            alpha: 1.0,
            threads: 1,
        }
    }

    pub const fn cc() -> Self {
        Self::flags(false, false, false, false)
    }

    pub const fn b() -> Self {
        Self::flags(true, false, false, false)
    }

    pub const fn bl() -> Self {
        Self::flags(true, true, false, false)
    }

    pub const fn bli() -> Self {
        Self::flags(true, true, true, false)
    }

    pub const fn blih() -> Self {
        Self::flags(true, true, true, true)
    }

    /// The four incremental configurations, in order of added filters.
    pub fn incremental() -> [EngineConfig; 4] {
        [Self::b(), Self::bl(), Self::bli(), Self::blih()]
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn sssp_mode(&self) -> SsspMode {
        if self.use_hybrid {
            SsspMode::Hybrid
        } else {
            SsspMode::TopDown
        }
    }

    /// Short name: `cc`, or the letters of the active filters (`bl`, `blih`, ...).
    pub fn name(&self) -> String {
        let letters: String = [
            (self.use_bcd, 'b'),
            (self.use_levels, 'l'),
            (self.use_identical, 'i'),
            (self.use_hybrid, 'h'),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|&(_, c)| c)
        .collect();
        if letters.is_empty() {
            "cc".to_string()
        } else {
            letters
        }
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self::blih()
    }
}

impl fmt::Display for EngineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for EngineConfig {
    type Err = String;

    /// Accepts `cc`, `cc-bl`, `bl`, `BLIH`, ... and ablations such as `l`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let letters = lower.strip_prefix("cc-").unwrap_or(&lower);
        let mut cfg = Self::cc();
        if letters == "cc" {
            return Ok(cfg);
        }
        if letters.is_empty() {
            return Err(format!("unknown configuration `{s}`"));
        }
        for c in letters.chars() {
            let flag = match c {
                'b' => &mut cfg.use_bcd,
                'l' => &mut cfg.use_levels,
                'i' => &mut cfg.use_identical,
                'h' => &mut cfg.use_hybrid,
                _ => return Err(format!("unknown configuration `{s}`")),
            };
            *flag = true;
        }
        Ok(cfg)
    }
}

/// Work done by one update.
#[derive(Clone, Debug, PartialEq)]
pub struct UpdateReport {
    pub event: EdgeEvent,
    /// Vertices in the update scope (the block, or the whole graph).
    pub sources_total: usize,
    pub sources_skipped_level: usize,
    pub sources_skipped_identical: usize,
    /// Searches run in the update phase (the two filter searches are not counted).
    pub sssp_count: usize,
    /// Vertices outside the scope corrected through their representative.
    pub fix_count: usize,
    pub bcd_rebuilt: bool,
    /// Bookkeeping and filtering: decomposition, representatives, level filter, deduplication.
    pub filter_time: Duration,
    /// Update searches and the fix phase.
    pub update_time: Duration,
}

impl UpdateReport {
    pub fn total_time(&self) -> Duration {
        self.filter_time + self.update_time
    }
}

/// Vertices to search, the graph to search them in (local ids), and weights.
struct Scope {
    vertices: Vec<VertexId>,
    graph: CsrGraph,
    reps: Option<RepInfo>,
}

/// Graph, centrality, and the auxiliary structures the active filters need.
pub struct Engine {
    graph: DynamicGraph,
    state: CentralityState,
    bcd: Option<BcdPartition>,
    closed: Option<IdenticalClasses>,
    open: Option<IdenticalClasses>,
    config: EngineConfig,
    pool: Option<rayon::ThreadPool>,
    workspace: BfsWorkspace,
}

impl Engine {
    /// Computes centrality from scratch and builds the structures `config` asks for.
    pub fn new(graph: DynamicGraph, config: EngineConfig) -> Self {
        let state = closeness_all_with(&graph, config.sssp_mode(), config.alpha, config.threads);
        let bcd = config.use_bcd.then(|| decompose(&graph));
        let (closed, open) = if config.use_identical {
            (
                Some(IdenticalClasses::build(&graph, IdentityKind::Closed)),
                Some(IdenticalClasses::build(&graph, IdentityKind::Open)),
            )
        } else {
            (None, None)
        };
        let pool = (config.threads > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .expect("failed to build thread pool")
        });
        Engine {
            graph,
            state,
            bcd,
            closed,
            open,
            config,
            pool,
            workspace: BfsWorkspace::default(),
        }
    }

    pub fn graph(&self) -> &DynamicGraph {
        &self.graph
    }

    pub fn state(&self) -> &CentralityState {
        &self.state
    }

    pub fn far(&self) -> &[u64] {
        self.state.far()
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn partition(&self) -> Option<&BcdPartition> {
        self.bcd.as_ref()
    }

    pub fn classes(&self, kind: IdentityKind) -> Option<&IdenticalClasses> {
        match kind {
            IdentityKind::Closed => self.closed.as_ref(),
            IdentityKind::Open => self.open.as_ref(),
        }
    }

    pub fn into_parts(self) -> (DynamicGraph, CentralityState) {
        (self.graph, self.state)
    }

    /// Inserts `uv` and updates every farness value.
    pub fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<UpdateReport> {
        self.graph.check_insertable(u, v)?;
        let start = Instant::now();
        let old_n = self.graph.vertex_count();
        self.graph.add_edge(u, v)?;
        for _ in old_n..self.graph.vertex_count() {
            self.state.push_isolated();
        }

        let (scope, bcd_rebuilt) = match &mut self.bcd {
            Some(pi) => {
                let outcome = pi.maintain_on_insert(&self.graph, u, v);
                let scope = Scope {
                    vertices: pi.members(outcome.cid).to_vec(),
                    graph: pi.component_subgraph(&self.graph, outcome.cid, None),
                    reps: Some(build_representatives(&self.graph, pi, outcome.cid)),
                };
                (scope, outcome.rebuilt)
            }
            None => (self.whole_graph_scope(), false),
        };
        self.maintain_classes(u, v);
        let (lu, lv) = scope.local_pair(u, v);
        let filter_graph = self.config.use_levels.then(|| scope.graph.without_edge(lu, lv));
        Ok(self.update(EdgeEvent::insert(u, v), scope, filter_graph.as_ref(), bcd_rebuilt, start))
    }

    /// Deletes `uv` and updates every farness value.
    pub fn delete_edge(&mut self, u: VertexId, v: VertexId) -> Result<UpdateReport> {
        if !self.graph.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let start = Instant::now();
        // The block that contained uv is the scope; its representatives are
        // unaffected by removing uv, so they are read off the old partition.
        let old_scope = self.bcd.as_ref().map(|pi| {
            let cid = pi.component_of(&self.graph, u, v).expect("edge is labeled");
            Scope {
                vertices: pi.members(cid).to_vec(),
                graph: pi.component_subgraph(&self.graph, cid, Some((u, v))),
                reps: Some(build_representatives(&self.graph, pi, cid)),
            }
        });
        self.graph.remove_edge(u, v)?;
        let scope = match (&mut self.bcd, old_scope) {
            (Some(pi), Some(scope)) => {
                pi.maintain_on_delete(&self.graph, u, v)?;
                scope
            }
            _ => self.whole_graph_scope(),
        };
        let bcd_rebuilt = self.bcd.is_some();
        self.maintain_classes(u, v);
        let filter_graph = self.config.use_levels.then(|| scope.graph.clone());
        Ok(self.update(EdgeEvent::delete(u, v), scope, filter_graph.as_ref(), bcd_rebuilt, start))
    }

    pub fn apply(&mut self, event: &EdgeEvent) -> Result<UpdateReport> {
        let mut report = match event.op {
            EdgeOp::Insert => self.insert_edge(event.u, event.v)?,
            EdgeOp::Delete => self.delete_edge(event.u, event.v)?,
        };
        report.event = *event;
        Ok(report)
    }

    /// Applies events in order; an error names the index of the failing event.
    pub fn process_stream(&mut self, events: &[EdgeEvent]) -> Result<Vec<UpdateReport>> {
        events
            .iter()
            .enumerate()
            .map(|(index, e)| {
                self.apply(e).map_err(|source| Error::Event {
                    index,
                    source: Box::new(source),
                })
            })
            .collect()
    }

    fn whole_graph_scope(&self) -> Scope {
        Scope {
            vertices: (0..self.graph.vertex_count() as VertexId).collect(),
            graph: self.graph.to_csr(),
            reps: None,
        }
    }

    fn maintain_classes(&mut self, u: VertexId, v: VertexId) {
        for classes in [&mut self.closed, &mut self.open].into_iter().flatten() {
            classes.maintain_on_edge_change(&self.graph, u, v);
        }
    }

    /// Dedup key: the vertex's closed class if non-trivial, else its open class if non-trivial.
    fn identity_key(&self, v: VertexId) -> Option<(IdentityKind, u32)> {
        [&self.closed, &self.open]
            .into_iter()
            .flatten()
            .find(|c| c.class_members_of(v).len() > 1)
            .map(|c| (c.kind(), c.class_of(v)))
    }

    fn update(
        &mut self,
        event: EdgeEvent,
        scope: Scope,
        filter_graph: Option<&CsrGraph>,
        bcd_rebuilt: bool,
        start: Instant,
    ) -> UpdateReport {
        let k = scope.vertices.len();
        let (lu, lv) = scope.local_pair(event.u, event.v);

        let candidates: Vec<usize> = match filter_graph {
            Some(fg) => {
                self.workspace.run(fg, lu, SsspMode::TopDown, 1.0);
                let du = self.workspace.distances().to_vec();
                self.workspace.run(fg, lv, SsspMode::TopDown, 1.0);
                let dv = self.workspace.distances();
                (0..k)
                    .filter(|&i| classify_source(du[i], dv[i]).needs_update())
                    .collect()
            }
            None => (0..k).collect(),
        };
        let skipped_level = k - candidates.len();

        // sources[j] is searched; every candidate maps to the search that serves it
        let mut sources: Vec<usize> = Vec::new();
        let mut served_by: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
        if self.config.use_identical {
            let mut seen: HashMap<(IdentityKind, u32), usize> = HashMap::new();
            for &i in &candidates {
                let slot = match self.identity_key(scope.vertices[i]) {
                    Some(key) => *seen.entry(key).or_insert_with(|| {
                        sources.push(i);
                        sources.len() - 1
                    }),
                    None => {
                        sources.push(i);
                        sources.len() - 1
                    }
                };
                served_by.push((i, slot));
            }
        } else {
            sources = candidates.clone();
            served_by.extend(candidates.iter().enumerate().map(|(j, &i)| (i, j)));
        }
        let skipped_identical = candidates.len() - sources.len();
        let filter_time = start.elapsed();

        let update_start = Instant::now();
        let results = self.search_all(&scope, &sources);

        // (local index) -> (farness delta, reach delta) for changed scope vertices
        let mut change: Vec<Option<(i64, i64)>> = vec![None; k];
        for &(i, slot) in &served_by {
            let v = scope.vertices[i];
            let (new_far, new_reach) = results[slot];
            let old_far = self.state.far()[v as usize];
            let old_reach = self.state.reach()[v as usize];
            if (new_far, new_reach) != (old_far, old_reach) {
                change[i] = Some((
                    new_far as i64 - old_far as i64,
                    new_reach as i64 - old_reach as i64,
                ));
            }
            self.state.set(v, new_far, new_reach);
        }

        let mut fix_count = 0;
        if let Some(reps) = &scope.reps {
            for x in 0..self.graph.vertex_count() as VertexId {
                let Some(r) = reps.rep(x) else { continue };
                if r == x {
                    continue;
                }
                let li = reps.local_index(r).expect("representatives lie in the scope");
                let Some((dfar, dreach)) = change[li] else {
                    continue;
                };
                // Every newly (un)reachable vertex is also reached through r, one
                // d(x, r) further away than from r itself.
                let hops = reps.rep_distance(x) as i64;
                let far = self.state.far()[x as usize] as i64 + dfar + dreach * hops;
                let reach = self.state.reach()[x as usize] as i64 + dreach;
                self.state.set(x, far as u64, reach as u32);
                fix_count += 1;
            }
        }

        UpdateReport {
            event,
            sources_total: k,
            sources_skipped_level: skipped_level,
            sources_skipped_identical: skipped_identical,
            sssp_count: sources.len(),
            fix_count,
            bcd_rebuilt,
            filter_time,
            update_time: update_start.elapsed(),
        }
    }

    fn search_all(&mut self, scope: &Scope, sources: &[usize]) -> Vec<(u64, u32)> {
        let mode = self.config.sssp_mode();
        let alpha = self.config.alpha;
        let k = scope.vertices.len();
        let reps = scope.reps.as_ref();
        match &self.pool {
            Some(pool) if sources.len() > 1 => pool.install(|| {
                sources
                    .par_iter()
                    .map_init(
                        || BfsWorkspace::new(k),
                        |ws, &s| weighted_farness(ws, &scope.graph, s as VertexId, mode, alpha, reps),
                    )
                    .collect()
            }),
            _ => sources
                .iter()
                .map(|&s| {
                    weighted_farness(&mut self.workspace, &scope.graph, s as VertexId, mode, alpha, reps)
                })
                .collect(),
        }
    }
}

impl Scope {
    fn local_pair(&self, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
        let local = |x: VertexId| match &self.reps {
            Some(reps) => reps.local_index(x).expect("endpoint lies in the scope") as VertexId,
            None => x,
        };
        (local(u), local(v))
    }
}

/// Farness and reach of `source` in the full graph, from a search of the scope only.
///
/// Every reached scope vertex `w` stands for `R[w]` vertices at total distance
/// `d(s,w) * R[w] + RF[w]`; the source itself contributes its own `RF[s]`.
fn weighted_farness(
    ws: &mut BfsWorkspace,
    graph: &CsrGraph,
    source: VertexId,
    mode: SsspMode,
    alpha: f64,
    reps: Option<&RepInfo>,
) -> (u64, u32) {
    ws.run(graph, source, mode, alpha);
    let Some(reps) = reps else {
        return farness_of_visited(ws);
    };
    let dist = ws.distances();
    let counts = reps.counts();
    let weights = reps.farness();
    let mut far = 0u64;
    let mut reached = 0u64;
    for &w in ws.visited() {
        let w = w as usize;
        far += dist[w] as u64 * counts[w] as u64 + weights[w];
        reached += counts[w] as u64;
    }
    debug_assert_eq!(graph.vertex_count(), counts.len());
    (far, (reached - 1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closeness::closeness_all;

    fn graph(n: usize, edges: &[(VertexId, VertexId)]) -> DynamicGraph {
        DynamicGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn all_configs() -> Vec<EngineConfig> {
        let mut v = vec![EngineConfig::cc(), "l".parse().unwrap()];
        v.extend(EngineConfig::incremental());
        v
    }

    fn assert_exact(engine: &Engine) {
        let expected = closeness_all(engine.graph(), SsspMode::TopDown);
        assert_eq!(engine.state(), &expected, "config {}", engine.config());
    }

    #[test]
    fn config_names_round_trip() {
        for cfg in all_configs() {
            assert_eq!(cfg.name().parse::<EngineConfig>().unwrap(), cfg);
        }
        assert_eq!("CC-BLIH".parse::<EngineConfig>().unwrap(), EngineConfig::blih());
        assert!("bx".parse::<EngineConfig>().is_err());
        assert!("".parse::<EngineConfig>().is_err());
    }

    #[test]
    fn closing_a_path_into_a_cycle() {
        for cfg in all_configs() {
            let mut engine = Engine::new(graph(4, &[(0, 1), (1, 2), (2, 3)]), cfg);
            let report = engine.insert_edge(0, 3).unwrap();
            assert_eq!(engine.far(), &[4, 4, 4, 4]);
            assert_eq!(engine.state().closeness(2), 0.25);
            if cfg.use_levels {
                assert_eq!(report.sources_skipped_level, 2, "{cfg}");
            }
            if cfg == EngineConfig::bl() {
                assert_eq!(report.sssp_count, 2);
            }
        }
    }

    #[test]
    fn duplicate_insert_is_rejected_without_side_effects() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        let mut engine = Engine::new(g.clone(), EngineConfig::blih());
        assert!(matches!(engine.insert_edge(0, 1), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(engine.insert_edge(3, 3), Err(Error::SelfLoop(3))));
        assert!(matches!(engine.delete_edge(0, 4), Err(Error::MissingEdge(0, 4))));
        assert_eq!(engine.graph(), &g);
        assert_exact(&engine);
    }

    #[test]
    fn joining_two_components() {
        for cfg in all_configs() {
            let mut engine = Engine::new(graph(4, &[(0, 1), (2, 3)]), cfg);
            let report = engine.insert_edge(1, 2).unwrap();
            assert_eq!(engine.far(), &[6, 4, 4, 6], "{cfg}");
            if cfg.use_bcd {
                assert!(report.bcd_rebuilt);
                assert_eq!(report.sources_total, 2);
                assert_eq!(report.fix_count, 2);
            }
        }
    }

    #[test]
    fn deletions() {
        for cfg in all_configs() {
            let mut engine = Engine::new(graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]), cfg);
            engine.delete_edge(0, 3).unwrap();
            assert_eq!(engine.far(), &[6, 4, 4, 6], "{cfg}");

            let mut engine = Engine::new(graph(4, &[(0, 1), (1, 2), (2, 3)]), cfg);
            engine.delete_edge(1, 2).unwrap();
            assert_eq!(engine.far(), &[1, 1, 1, 1], "{cfg}");
            assert_exact(&engine);
        }
    }

    #[test]
    fn delete_then_reinsert_restores_state() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        for cfg in all_configs() {
            let mut engine = Engine::new(g.clone(), cfg);
            let before = engine.state().clone();
            for (u, v) in [(2, 3), (0, 1), (4, 5)] {
                engine.delete_edge(u, v).unwrap();
                assert_exact(&engine);
                engine.insert_edge(u, v).unwrap();
                assert_eq!(engine.state(), &before, "{cfg}");
            }
        }
    }

    #[test]
    fn long_tails_are_fixed_through_their_representative() {
        // square 0-1-2-3 with a tail 3-4-5-6 and a pendant 1-7
        let g = graph(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (1, 7)]);
        for cfg in all_configs() {
            let mut engine = Engine::new(g.clone(), cfg);
            let report = engine.insert_edge(1, 3).unwrap();
            assert_exact(&engine);
            if cfg.use_bcd {
                assert_eq!(report.sources_total, 4);
                assert_eq!(report.fix_count, 4);
            }
            engine.delete_edge(0, 3).unwrap();
            assert_exact(&engine);
        }
    }

    #[test]
    fn fresh_vertices_grow_every_structure() {
        for cfg in all_configs() {
            let mut engine = Engine::new(graph(3, &[(0, 1), (1, 2)]), cfg);
            engine.insert_edge(2, 3).unwrap();
            engine.insert_edge(4, 5).unwrap();
            engine.insert_edge(5, 0).unwrap();
            assert_eq!(engine.graph().vertex_count(), 6);
            assert_exact(&engine);
            assert!(matches!(
                engine.insert_edge(0, 9),
                Err(Error::VertexOutOfRange { id: 9, n: 6 })
            ));
        }
    }

    #[test]
    fn identical_vertices_share_one_search() {
        // 0 and 1 are open twins over {2, 3}; the path 3-4-5 hangs off 3
        let g = graph(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (3, 4), (4, 5)]);
        let mut engine = Engine::new(g, EngineConfig::bli());
        let report = engine.insert_edge(2, 5).unwrap();
        assert_exact(&engine);
        assert!(report.sources_skipped_identical >= 1);
        assert_eq!(
            report.sources_total,
            report.sources_skipped_level + report.sources_skipped_identical + report.sssp_count
        );
    }

    #[test]
    fn threads_do_not_change_results() {
        let g = graph(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 7), (7, 8), (8, 5)],
        );
        let mut one = Engine::new(g.clone(), EngineConfig::blih());
        let mut four = Engine::new(g, EngineConfig::blih().with_threads(4));
        for e in [EdgeEvent::insert(0, 2), EdgeEvent::delete(2, 5), EdgeEvent::insert(4, 8)] {
            let a = one.apply(&e).unwrap();
            let b = four.apply(&e).unwrap();
            assert_eq!(a.sssp_count, b.sssp_count);
            assert_eq!(one.state(), four.state());
        }
        assert_exact(&four);
    }

    #[test]
    fn stream_errors_carry_the_index() {
        let mut engine = Engine::new(graph(3, &[(0, 1)]), EngineConfig::bl());
        assert!(engine.process_stream(&[]).unwrap().is_empty());
        let err = engine
            .process_stream(&[EdgeEvent::insert(1, 2), EdgeEvent::insert(1, 2)])
            .unwrap_err();
        assert!(matches!(err, Error::Event { index: 1, .. }));
    }
}
