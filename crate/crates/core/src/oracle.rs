//! Brute-force references, written straight from the definitions.
//!
//! Nothing here reuses the optimized kernels: distances come from a plain
//! queue-based search, blocks from vertex-separation tests, and identical
//! classes from pairwise set comparison. Intended for small graphs.

use std::collections::{BTreeSet, VecDeque};

use crate::closeness::CentralityState;
use crate::graph::{DynamicGraph, VertexId};
use crate::identical::IdentityKind;

fn bfs(adj: &[BTreeSet<usize>], source: usize, removed: Option<usize>) -> Vec<Option<u64>> {
    let mut dist = vec![None; adj.len()];
    if Some(source) == removed {
        return dist;
    }
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in &adj[x] {
            if Some(y) != removed && dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn adjacency_sets(g: &DynamicGraph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u as usize].insert(v as usize);
        adj[v as usize].insert(u as usize);
    }
    adj
}

/// Farness and reach of every vertex, one unoptimized search per vertex.
pub fn oracle_closeness(g: &DynamicGraph) -> CentralityState {
    let adj = adjacency_sets(g);
    let mut far = Vec::with_capacity(adj.len());
    let mut reach = Vec::with_capacity(adj.len());
    for s in 0..adj.len() {
        let dist = bfs(&adj, s, None);
        far.push(dist.iter().flatten().sum());
        reach.push(dist.iter().flatten().count() as u32 - 1);
    }
    CentralityState::new(far, reach)
}

/// Hop distance between every pair; `None` when disconnected.
pub fn oracle_all_pairs(g: &DynamicGraph) -> Vec<Vec<Option<u64>>> {
    let adj = adjacency_sets(g);
    (0..adj.len()).map(|s| bfs(&adj, s, None)).collect()
}

fn component_count(adj: &[BTreeSet<usize>], removed: Option<usize>) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if seen[s] || Some(s) == removed {
            continue;
        }
        count += 1;
        for (v, d) in bfs(adj, s, removed).into_iter().enumerate() {
            if d.is_some() {
                seen[v] = true;
            }
        }
    }
    count
}

/// Blocks and articulation vertices of a graph, from the definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveBcd {
    /// Each block as sorted `(a, b)` edges with `a < b`; blocks sorted.
    pub components: Vec<Vec<(VertexId, VertexId)>>,
    pub articulation: Vec<VertexId>,
}

/// Articulation vertices by deletion test; blocks by closing "lie on a common
/// cycle" over edge pairs.
///
/// Two distinct edges lie on a common cycle iff, after subdividing each with a
/// new vertex, no single vertex separates the two subdivision vertices.
pub fn oracle_bcd(g: &DynamicGraph) -> NaiveBcd {
    let adj = adjacency_sets(g);
    let n = adj.len();
    let base = component_count(&adj, None);
    let articulation = (0..n)
        .filter(|&v| component_count(&adj, Some(v)) > base)
        .map(|v| v as VertexId)
        .collect();

    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u as usize, v as usize)).collect();
    let m = edges.len();
    let mut label: Vec<usize> = (0..m).collect();
    for i in 0..m {
        for j in i + 1..m {
            if label[i] == label[j] {
                continue;
            }
            if on_common_cycle(&adj, edges[i], edges[j]) {
                let (from, to) = (label[j], label[i]);
                for l in label.iter_mut() {
                    if *l == from {
                        *l = to;
                    }
                }
            }
        }
    }
    let mut groups: Vec<Vec<(VertexId, VertexId)>> = Vec::new();
    let mut ids: Vec<usize> = label.clone();
    ids.sort_unstable();
    ids.dedup();
    for id in ids {
        let mut block: Vec<(VertexId, VertexId)> = edges
            .iter()
            .zip(&label)
            .filter(|(_, &l)| l == id)
            .map(|(&(a, b), _)| (a as VertexId, b as VertexId))
            .collect();
        block.sort_unstable();
        groups.push(block);
    }
    groups.sort();
    NaiveBcd {
        components: groups,
        articulation,
    }
}

fn on_common_cycle(adj: &[BTreeSet<usize>], e: (usize, usize), f: (usize, usize)) -> bool {
    let n = adj.len();
    let (x, y) = (n, n + 1);
    let mut sub: Vec<BTreeSet<usize>> = adj.to_vec();
    sub.push(BTreeSet::new());
    sub.push(BTreeSet::new());
    for (mid, (a, b)) in [(x, e), (y, f)] {
        sub[a].remove(&b);
        sub[b].remove(&a);
        sub[a].insert(mid);
        sub[b].insert(mid);
        sub[mid].insert(a);
        sub[mid].insert(b);
    }
    if bfs(&sub, x, None)[y].is_none() {
        return false;
    }
    (0..n).all(|z| bfs(&sub, x, Some(z))[y].is_some())
}

/// Identical-vertex classes by pairwise comparison of neighborhoods.
pub fn oracle_identical(g: &DynamicGraph, kind: IdentityKind) -> Vec<Vec<VertexId>> {
    let adj = adjacency_sets(g);
    let hood = |v: usize| -> BTreeSet<usize> {
        let mut set = adj[v].clone();
        if kind == IdentityKind::Closed {
            set.insert(v);
        }
        set
    };
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut assigned = vec![false; adj.len()];
    for v in 0..adj.len() {
        if assigned[v] {
            continue;
        }
        let mine = hood(v);
        let class: Vec<VertexId> = (v..adj.len())
            .filter(|&w| !assigned[w] && hood(w) == mine)
            .map(|w| w as VertexId)
            .collect();
        for &w in &class {
            assigned[w as usize] = true;
        }
        classes.push(class);
    }
    classes
}
