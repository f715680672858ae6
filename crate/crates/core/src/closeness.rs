//! Farness and closeness from scratch: one breadth-first search per vertex.

use rayon::prelude::*;

use crate::graph::{Adjacency, BfsWorkspace, SsspMode, VertexId, UNREACHABLE};

/// Per-vertex farness (sum of finite hop distances) and reach (number of other
/// vertices at finite distance).
///
/// Farness is the source of truth; closeness is derived as `1 / far` and is
/// `0` for a vertex that reaches nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CentralityState {
    far: Vec<u64>,
    reach: Vec<u32>,
}

impl CentralityState {
    pub fn new(far: Vec<u64>, reach: Vec<u32>) -> Self {
        assert_eq!(far.len(), reach.len());
        CentralityState { far, reach }
    }

    pub fn len(&self) -> usize {
        self.far.len()
    }

    pub fn is_empty(&self) -> bool {
        self.far.is_empty()
    }

    pub fn far(&self) -> &[u64] {
        &self.far
    }

    pub fn reach(&self) -> &[u32] {
        &self.reach
    }

    pub fn closeness(&self, v: VertexId) -> f64 {
        closeness_from_farness(self.far[v as usize])
    }

    pub fn closeness_vec(&self) -> Vec<f64> {
        self.far.iter().map(|&f| closeness_from_farness(f)).collect()
    }

    pub(crate) fn set(&mut self, v: VertexId, far: u64, reach: u32) {
        self.far[v as usize] = far;
        self.reach[v as usize] = reach;
    }

    pub(crate) fn push_isolated(&mut self) {
        self.far.push(0);
        self.reach.push(0);
    }
}

pub fn closeness_from_farness(far: u64) -> f64 {
    if far == 0 {
        0.0
    } else {
        1.0 / far as f64
    }
}

/// Sum of the finite entries of a distance array.
pub fn farness_from_distances(dist: &[u32]) -> u64 {
    dist.iter()
        .filter(|&&d| d != UNREACHABLE)
        .map(|&d| d as u64)
        .sum()
}

/// Farness and reach of the last source run in `ws`.
pub(crate) fn farness_of_visited(ws: &BfsWorkspace) -> (u64, u32) {
    let dist = ws.distances();
    let far = ws.visited().iter().map(|&w| dist[w as usize] as u64).sum();
    (far, (ws.visited().len() - 1) as u32)
}

/// Closeness of every vertex, sequentially.
pub fn closeness_all<G: Adjacency + ?Sized>(g: &G, mode: SsspMode) -> CentralityState {
    closeness_all_with(g, mode, 1.0, 1)
}

/// Closeness of every vertex with an explicit hybrid ratio and thread count.
///
/// The per-source searches are independent; with `threads > 1` they run on a
/// dedicated pool and write disjoint slots, so the result does not depend on
/// scheduling.
pub fn closeness_all_with<G: Adjacency + ?Sized>(
    g: &G,
    mode: SsspMode,
    alpha: f64,
    threads: usize,
) -> CentralityState {
    let n = g.vertex_count();
    let run = |ws: &mut BfsWorkspace, s: usize| {
        ws.run(g, s as VertexId, mode, alpha);
        farness_of_visited(ws)
    };
    let pairs: Vec<(u64, u32)> = if threads <= 1 {
        let mut ws = BfsWorkspace::new(n);
        (0..n).map(|s| run(&mut ws, s)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build thread pool");
        pool.install(|| {
            (0..n)
                .into_par_iter()
                .map_init(|| BfsWorkspace::new(n), |ws, s| run(ws, s))
                .collect()
        })
    };
    let (far, reach) = pairs.into_iter().unzip();
    CentralityState { far, reach }
}

/// Farness and closeness of one vertex.
pub fn closeness_single<G: Adjacency + ?Sized>(g: &G, s: VertexId) -> (u64, f64) {
    let mut ws = BfsWorkspace::new(g.vertex_count());
    ws.run(g, s, SsspMode::TopDown, 1.0);
    let (far, _) = farness_of_visited(&ws);
    (far, closeness_from_farness(far))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DynamicGraph;

    #[test]
    fn farness_sums_finite_entries() {
        assert_eq!(farness_from_distances(&[0, 1, 2, UNREACHABLE]), 3);
        assert_eq!(farness_from_distances(&[0, UNREACHABLE, UNREACHABLE]), 0);
        assert_eq!(farness_from_distances(&[0, 1, 2, 1]), 4);
    }

    #[test]
    fn path_of_three() {
        let g = DynamicGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let state = closeness_all(&g, SsspMode::TopDown);
        assert_eq!(state.far(), &[3, 2, 3]);
        assert_eq!(state.closeness_vec(), vec![1.0 / 3.0, 0.5, 1.0 / 3.0]);
        assert_eq!(state.reach(), &[2, 2, 2]);
    }

    #[test]
    fn isolated_vertex_has_zero_closeness() {
        let g = DynamicGraph::from_edges(3, [(0, 1)]).unwrap();
        let state = closeness_all(&g, SsspMode::Hybrid);
        assert_eq!(state.closeness(2), 0.0);
        assert_eq!(state.far()[2], 0);
        assert_eq!(closeness_single(&g, 2), (0, 0.0));
    }

    #[test]
    fn single_edge() {
        let g = DynamicGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(closeness_all(&g, SsspMode::BottomUp).closeness_vec(), vec![1.0, 1.0]);
    }

    #[test]
    fn single_source_on_path() {
        let g = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(closeness_single(&g, 0), (6, 1.0 / 6.0));
        assert_eq!(closeness_single(&g, 1).0, 4);
    }

    #[test]
    fn complete_graph_and_threads() {
        let n = 6;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let g = DynamicGraph::from_edges(n as usize, edges).unwrap();
        let seq = closeness_all(&g, SsspMode::TopDown);
        assert!(seq.far().iter().all(|&f| f == n as u64 - 1));
        let par = closeness_all_with(&g, SsspMode::Hybrid, 1.0, 3);
        assert_eq!(seq, par);
    }
}
