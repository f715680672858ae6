use std::str::FromStr;

use super::{Adjacency, VertexId, UNREACHABLE};

/// Which breadth-first kernel to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SsspMode {
    /// Expand every frontier vertex's neighbor list.
    #[default]
    TopDown,
    /// Scan the unvisited vertices for a neighbor in the frontier.
    BottomUp,
    /// Pick the cheaper of the two at every level, see [`choose_direction`].
    Hybrid,
}

impl FromStr for SsspMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "top-down" | "topdown" => Ok(SsspMode::TopDown),
            "bottom-up" | "bottomup" => Ok(SsspMode::BottomUp),
            "hybrid" => Ok(SsspMode::Hybrid),
            other => Err(format!("unknown SSSP mode `{other}`")),
        }
    }
}

/// Direction of a single BFS level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    TopDown,
    BottomUp,
}

/// Per-level direction choice of the hybrid kernel.
///
/// A top-down step touches every edge incident to the frontier; a bottom-up
/// step touches at most every edge incident to an unvisited vertex. The
/// bottom-up step is taken only when the frontier side is strictly larger than
/// `unvisited_edge_sum / alpha`, so ties stay top-down.
pub fn choose_direction(frontier_edge_sum: u64, unvisited_edge_sum: u64, alpha: f64) -> Direction {
    debug_assert!(alpha > 0.0);
    if frontier_edge_sum as f64 > unvisited_edge_sum as f64 / alpha {
        Direction::BottomUp
    } else {
        Direction::TopDown
    }
}

/// Reusable buffers for repeated breadth-first searches over graphs of the same size.
///
/// After [`run`](BfsWorkspace::run) the distances of the last source are
/// available through [`distances`](BfsWorkspace::distances), and the reached
/// vertices, level by level, through [`visited`](BfsWorkspace::visited).
#[derive(Clone, Debug, Default)]
pub struct BfsWorkspace {
    dist: Vec<u32>,
    order: Vec<VertexId>,
    frontier: Vec<u64>,
    unvisited: Vec<VertexId>,
}

impl BfsWorkspace {
    pub fn new(n: usize) -> Self {
        BfsWorkspace {
            dist: vec![UNREACHABLE; n],
            order: Vec::with_capacity(n),
            frontier: vec![0; n.div_ceil(64)],
            unvisited: Vec::new(),
        }
    }

    fn reset(&mut self, n: usize) {
        if self.dist.len() == n {
            for &v in &self.order {
                self.dist[v as usize] = UNREACHABLE;
            }
        } else {
            self.dist.clear();
            self.dist.resize(n, UNREACHABLE);
            self.frontier.clear();
            self.frontier.resize(n.div_ceil(64), 0);
        }
        self.order.clear();
        self.unvisited.clear();
    }

    /// Hop distances from `source`; unreachable vertices hold [`UNREACHABLE`].
    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    /// Vertices reached by the last run in nondecreasing distance order; `source` first.
    pub fn visited(&self) -> &[VertexId] {
        &self.order
    }

    pub fn into_distances(self) -> Vec<u32> {
        self.dist
    }

    pub fn run<G: Adjacency + ?Sized>(&mut self, g: &G, source: VertexId, mode: SsspMode, alpha: f64) {
        let n = g.vertex_count();
        assert!((source as usize) < n, "source {source} out of range ({n} vertices)");
        self.reset(n);

        self.dist[source as usize] = 0;
        self.order.push(source);
        let total_edges = g.degree_sum();
        let mut frontier_edges = g.degree(source) as u64;
        let mut visited_edges = frontier_edges;
        let mut unvisited_ready = false;
        let mut level_start = 0;
        let mut level = 0u32;

        loop {
            let level_end = self.order.len();
            if level_start == level_end {
                break;
            }
            let direction = match mode {
                SsspMode::TopDown => Direction::TopDown,
                SsspMode::BottomUp => Direction::BottomUp,
                SsspMode::Hybrid => {
                    choose_direction(frontier_edges, total_edges - visited_edges, alpha)
                }
            };
            let next = level + 1;
            let mut next_edges = 0u64;
            match direction {
                Direction::TopDown => {
                    for i in level_start..level_end {
                        let x = self.order[i];
                        for &y in g.neighbors(x) {
                            let d = &mut self.dist[y as usize];
                            if *d == UNREACHABLE {
                                *d = next;
                                self.order.push(y);
                                next_edges += g.degree(y) as u64;
                            }
                        }
                    }
                }
                Direction::BottomUp => {
                    if !unvisited_ready {
                        let dist = &self.dist;
                        self.unvisited
                            .extend((0..n as VertexId).filter(|&v| dist[v as usize] == UNREACHABLE));
                        unvisited_ready = true;
                    }
                    for &x in &self.order[level_start..level_end] {
                        self.frontier[x as usize / 64] |= 1 << (x % 64);
                    }
                    let mut kept = 0;
                    for i in 0..self.unvisited.len() {
                        let w = self.unvisited[i];
                        if self.dist[w as usize] != UNREACHABLE {
                            // reached by an earlier top-down level
                            continue;
                        }
                        let frontier = &self.frontier;
                        let hit = g
                            .neighbors(w)
                            .iter()
                            .any(|&x| frontier[x as usize / 64] & (1 << (x % 64)) != 0);
                        if hit {
                            self.dist[w as usize] = next;
                            self.order.push(w);
                            next_edges += g.degree(w) as u64;
                        } else {
                            self.unvisited[kept] = w;
                            kept += 1;
                        }
                    }
                    self.unvisited.truncate(kept);
                    for &x in &self.order[level_start..level_end] {
                        self.frontier[x as usize / 64] = 0;
                    }
                }
            }
            visited_edges += next_edges;
            frontier_edges = next_edges;
            level_start = level_end;
            level = next;
        }
    }
}

/// Hop distances from `source` using the requested kernel (hybrid uses `alpha = 1`).
pub fn sssp_distances<G: Adjacency + ?Sized>(g: &G, source: VertexId, mode: SsspMode) -> Vec<u32> {
    let mut ws = BfsWorkspace::new(g.vertex_count());
    ws.run(g, source, mode, 1.0);
    ws.into_distances()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DynamicGraph;

    const MODES: [SsspMode; 3] = [SsspMode::TopDown, SsspMode::BottomUp, SsspMode::Hybrid];

    #[test]
    fn path_distances() {
        let g = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for mode in MODES {
            assert_eq!(sssp_distances(&g, 0, mode), vec![0, 1, 2, 3], "{mode:?}");
        }
    }

    #[test]
    fn isolated_vertex_unreachable() {
        let g = DynamicGraph::from_edges(3, [(0, 1)]).unwrap();
        for mode in MODES {
            assert_eq!(sssp_distances(&g, 0, mode), vec![0, 1, UNREACHABLE]);
            assert_eq!(sssp_distances(&g, 2, mode), vec![UNREACHABLE, UNREACHABLE, 0]);
        }
    }

    #[test]
    fn direction_choice() {
        assert_eq!(choose_direction(10, 1000, 1.0), Direction::TopDown);
        assert_eq!(choose_direction(1000, 10, 1.0), Direction::BottomUp);
        assert_eq!(choose_direction(50, 50, 1.0), Direction::TopDown);
        assert_eq!(choose_direction(50, 50, 2.0), Direction::BottomUp);
    }

    #[test]
    fn workspace_reuse_across_sizes() {
        let small = DynamicGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let big = DynamicGraph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let mut ws = BfsWorkspace::new(3);
        ws.run(&small, 2, SsspMode::Hybrid, 1.0);
        assert_eq!(ws.distances(), &[2, 1, 0]);
        ws.run(&big, 4, SsspMode::BottomUp, 1.0);
        assert_eq!(ws.distances(), &[UNREACHABLE, UNREACHABLE, UNREACHABLE, 1, 0]);
        assert_eq!(ws.visited(), &[4, 3]);
        ws.run(&big, 0, SsspMode::TopDown, 1.0);
        assert_eq!(ws.distances(), &[0, 1, UNREACHABLE, UNREACHABLE, UNREACHABLE]);
    }

    #[test]
    fn parse_mode() {
        assert_eq!("hybrid".parse::<SsspMode>().unwrap(), SsspMode::Hybrid);
        assert_eq!("top_down".parse::<SsspMode>().unwrap(), SsspMode::TopDown);
        assert!("sideways".parse::<SsspMode>().is_err());
    }
}
