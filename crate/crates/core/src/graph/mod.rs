//! Mutable simple undirected graphs and the breadth-first kernels that run on them.
//!
//! [`DynamicGraph`] is the structure the engine mutates: one sorted neighbor
//! list per vertex. [`CsrGraph`] is an immutable compressed-row snapshot used
//! for the all-sources sweeps, where contiguous storage matters more than
//! cheap mutation.

pub mod sssp;

use std::collections::VecDeque;

pub use sssp::{choose_direction, sssp_distances, BfsWorkspace, Direction, SsspMode};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = u32;

/// Distance sentinel for vertices outside the source's connected component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Read-only neighbor access shared by every traversal in the crate.
pub trait Adjacency: Sync {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Sum of all degrees, i.e. twice the edge count.
    fn degree_sum(&self) -> u64 {
        (0..self.vertex_count() as VertexId)
            .map(|v| self.degree(v) as u64)
            .sum()
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DynamicGraph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl DynamicGraph {
    /// Graph with `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        DynamicGraph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph on `n` vertices. Fails on self-loops, duplicate edges, or ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = DynamicGraph::new(n);
        for (u, v) in edges {
            for id in [u, v] {
                if id as usize >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match self.adjacency.get(u as usize) {
            Some(list) => list.binary_search(&v).is_ok(),
            None => false,
        }
    }

    /// Iterates every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Appends one isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        (self.adjacency.len() - 1) as VertexId
    }

    /// Checks whether `add_edge(u, v)` would succeed without touching the graph.
    pub fn check_insertable(&self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let n = self.vertex_count();
        // Fresh ids must extend the range contiguously: {n} or {n, n+1}.
        let fresh = [u, v].iter().filter(|&&id| id as usize >= n).count();
        for id in [u, v] {
            if id as usize >= n + fresh {
                return Err(Error::VertexOutOfRange { id, n });
            }
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        Ok(())
    }

    /// Inserts `uv`. An endpoint equal to the current vertex count (or one past it
    /// when both endpoints are fresh) grows the graph.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_insertable(u, v)?;
        let needed = u.max(v) as usize + 1;
        while self.adjacency.len() < needed {
            self.add_vertex();
        }
        insert_sorted(&mut self.adjacency[u as usize], v);
        insert_sorted(&mut self.adjacency[v as usize], u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        remove_sorted(&mut self.adjacency[u as usize], v);
        remove_sorted(&mut self.adjacency[v as usize], u);
        self.edge_count -= 1;
        Ok(())
    }

    /// True iff removing `uv` disconnects `u` from `v`.
    pub fn is_bridge(&self, u: VertexId, v: VertexId) -> Result<bool> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([u]);
        seen[u as usize] = true;
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if x == u && y == v {
                    continue;
                }
                if y == v {
                    return Ok(false);
                }
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(true)
    }

    /// Connected-component label per vertex (labels in order of smallest member) and the count.
    pub fn connected_components(&self) -> (Vec<u32>, usize) {
        let n = self.vertex_count();
        let mut label = vec![u32::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if label[root] != u32::MAX {
                continue;
            }
            label[root] = count;
            stack.push(root as VertexId);
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if label[y as usize] == u32::MAX {
                        label[y as usize] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count as usize)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().1 <= 1
    }

    pub fn to_csr(&self) -> CsrGraph {
        CsrGraph::from_adjacency(self)
    }
}

impl Adjacency for DynamicGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    fn degree_sum(&self) -> u64 {
        2 * self.edge_count as u64
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, x: VertexId) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

fn remove_sorted(list: &mut Vec<VertexId>, x: VertexId) {
    if let Ok(pos) = list.binary_search(&x) {
        list.remove(pos);
    }
}

/// Immutable compressed-row adjacency. Neighbor lists stay sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsrGraph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl CsrGraph {
    pub fn from_adjacency<G: Adjacency + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(g.degree_sum() as usize);
        offsets.push(0);
        for v in 0..n as VertexId {
            targets.extend_from_slice(g.neighbors(v));
            offsets.push(targets.len());
        }
        CsrGraph { offsets, targets }
    }

    /// Builds from an undirected edge list over `n` vertices; each edge is stored in both directions.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        CsrGraph { offsets, targets }
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Copy of this graph with the edge `uv` dropped (a no-op if absent).
    pub fn without_edge(&self, u: VertexId, v: VertexId) -> CsrGraph {
        let n = self.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(self.targets.len());
        offsets.push(0);
        for x in 0..n as VertexId {
            let skip = if x == u {
                Some(v)
            } else if x == v {
                Some(u)
            } else {
                None
            };
            targets.extend(self.neighbors(x).iter().copied().filter(|&y| Some(y) != skip));
            offsets.push(targets.len());
        }
        CsrGraph { offsets, targets }
    }
}

impl Adjacency for CsrGraph {
    fn vertex_count(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    #[inline]
    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn degree_sum(&self) -> u64 {
        self.targets.len() as u64
    }
}
