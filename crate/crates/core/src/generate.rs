//! Seeded random graph generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DynamicGraph, VertexId};

/// Preferential attachment: a clique on `attach + 1` vertices, then every new
/// vertex links to `attach` distinct earlier vertices chosen with probability
/// proportional to degree. The result is connected.
pub fn barabasi_albert(n: usize, attach: usize, seed: u64) -> DynamicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attach = attach.max(1);
    let core = (attach + 1).min(n);
    let mut g = DynamicGraph::new(n);
    // every edge endpoint once, so sampling it is degree-proportional
    let mut endpoints: Vec<VertexId> = Vec::new();
    for a in 0..core as VertexId {
        for b in a + 1..core as VertexId {
            g.add_edge(a, b).unwrap();
            endpoints.extend([a, b]);
        }
    }
    let mut targets = Vec::with_capacity(attach);
    for v in core as VertexId..n as VertexId {
        targets.clear();
        while targets.len() < attach {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            g.add_edge(v, t).unwrap();
            endpoints.extend([v, t]);
        }
    }
    g
}

/// Uniform random simple graph with `n` vertices and `m` edges.
pub fn gnm(n: usize, m: usize, seed: u64) -> DynamicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = DynamicGraph::new(n);
    add_random_edges(&mut g, m, &mut rng);
    g
}

/// Random spanning tree plus uniform extra edges up to `m` edges in total
/// (or the tree alone when `m < n - 1`). Always connected.
pub fn random_connected(n: usize, m: usize, seed: u64) -> DynamicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = DynamicGraph::new(n);
    let mut order: Vec<VertexId> = (0..n as VertexId).collect();
    order.shuffle(&mut rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).unwrap();
    }
    add_random_edges(&mut g, m, &mut rng);
    g
}

fn add_random_edges(g: &mut DynamicGraph, m: usize, rng: &mut ChaCha8Rng) {
    let n = g.vertex_count();
    let target = m.min(n * n.saturating_sub(1) / 2);
    while g.edge_count() < target {
        let u = rng.gen_range(0..n) as VertexId;
        let v = rng.gen_range(0..n) as VertexId;
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
}
