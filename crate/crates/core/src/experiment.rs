//! The remove-then-reinsert protocol used to benchmark insertions.
//!
//! `k` edges are removed from the input one at a time, never a bridge, so the
//! reduced graph keeps the component structure of the original. The removed
//! edges are then replayed as insertions, which ends on the original graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bcd::decompose;
use crate::error::{Error, Result};
use crate::graph::{DynamicGraph, VertexId};
use crate::io::EdgeEvent;

/// Returns the reduced graph and the insertion stream that restores `g`.
///
/// Each removal picks a vertex uniformly, then a uniform neighbor of it, and
/// retries if that edge is a bridge of the current graph.
pub fn prepare_random_experiment(g: &DynamicGraph, k: usize, seed: u64) -> Result<(DynamicGraph, Vec<EdgeEvent>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = g.clone();
    let mut events = Vec::with_capacity(k);
    let n = g.vertex_count();
    while events.len() < k {
        let pi = decompose(&g);
        let available = g.edges().filter(|&(a, b)| !pi.is_bridge(&g, a, b)).count();
        if available == 0 {
            return Err(Error::InsufficientNonBridgeEdges {
                requested: k,
                available: events.len(),
            });
        }
        let (u, v) = loop {
            let u = rng.gen_range(0..n) as VertexId;
            let deg = g.degree(u);
            if deg == 0 {
                continue;
            }
            let v = g.neighbors(u)[rng.gen_range(0..deg)];
            if !pi.is_bridge(&g, u, v) {
                break (u, v);
            }
        };
        g.remove_edge(u, v)?;
        events.push(EdgeEvent::insert(u, v));
    }
    Ok((g, events))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_connected;

    #[test]
    fn replay_restores_the_graph() {
        let original = random_connected(40, 90, 3);
        let (mut reduced, events) = prepare_random_experiment(&original, 20, 7).unwrap();
        assert_eq!(reduced.edge_count(), 70);
        assert!(reduced.is_connected());
        for e in &events {
            reduced.add_edge(e.u, e.v).unwrap();
        }
        assert_eq!(reduced.edges().collect::<Vec<_>>(), original.edges().collect::<Vec<_>>());
    }

    #[test]
    fn trees_have_nothing_to_remove() {
        let tree = DynamicGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let err = prepare_random_experiment(&tree, 1, 0).unwrap_err();
        assert!(matches!(err, Error::InsufficientNonBridgeEdges { requested: 1, available: 0 }));
    }

    #[test]
    fn small_cases() {
        let c4 = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (reduced, events) = prepare_random_experiment(&c4, 1, 0).unwrap();
        assert_eq!((reduced.edge_count(), events.len()), (3, 1));

        let p4 = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(prepare_random_experiment(&p4, 1, 0).is_err());

        let tail = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        for seed in 0..50 {
            let (_, events) = prepare_random_experiment(&tail, 1, seed).unwrap();
            let e = events[0];
            assert!((e.u.min(e.v), e.u.max(e.v)) != (2, 3));
        }
    }

    #[test]
    fn seeded() {
        let g = random_connected(30, 60, 1);
        let a = prepare_random_experiment(&g, 10, 5).unwrap().1;
        let b = prepare_random_experiment(&g, 10, 5).unwrap().1;
        assert_eq!(a, b);
    }
}
