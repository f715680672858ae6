//! Biconnected-component decomposition and the representative aggregates built on it.
//!
//! A [`BcdPartition`] labels every edge with the biconnected component (block)
//! it belongs to. After an edge change only the block containing the edge
//! needs fresh searches: every vertex outside the block hangs off exactly one
//! articulation vertex of the block (its *representative*), so its distances
//! to the block factor through that vertex. [`RepInfo`] records, per block
//! vertex `w`, how many vertices it represents (`R[w]`, itself included) and
//! their summed distance to it (`RF[w]`). A search restricted to the block then
//! recovers full farness as `sum over w of d(s,w) * R[w] + RF[w]`.

use crate::error::{Error, Result};
use crate::graph::{CsrGraph, DynamicGraph, VertexId, UNREACHABLE};

pub type ComponentId = u32;

/// Marker for "no component" / "no representative".
pub const NONE: u32 = u32::MAX;

/// Edge partition into biconnected components.
///
/// Edge labels are stored parallel to the adjacency lists of the graph the
/// partition was built for; every accessor taking a graph expects that same
/// graph. Component ids are not stable across rebuilds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BcdPartition {
    edge_component: Vec<Vec<ComponentId>>,
    members: Vec<Vec<VertexId>>,
    articulation: Vec<bool>,
}

/// Result of [`BcdPartition::maintain_on_insert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertOutcome {
    /// Component of the inserted edge.
    pub cid: ComponentId,
    /// Whether the endpoints shared no component and the partition was rebuilt.
    pub rebuilt: bool,
}

impl BcdPartition {
    pub fn vertex_count(&self) -> usize {
        self.edge_component.len()
    }

    pub fn component_count(&self) -> usize {
        self.members.len()
    }

    /// Sorted vertex set of a component.
    pub fn members(&self, cid: ComponentId) -> &[VertexId] {
        &self.members[cid as usize]
    }

    pub fn is_articulation(&self, v: VertexId) -> bool {
        self.articulation[v as usize]
    }

    pub fn articulation_points(&self) -> Vec<VertexId> {
        (0..self.articulation.len() as VertexId)
            .filter(|&v| self.articulation[v as usize])
            .collect()
    }

    /// Component of edge `uv`, if present.
    pub fn component_of(&self, g: &DynamicGraph, u: VertexId, v: VertexId) -> Option<ComponentId> {
        let pos = g.neighbors(u).binary_search(&v).ok()?;
        self.edge_component.get(u as usize)?.get(pos).copied()
    }

    /// True iff `uv` is present and forms a block on its own.
    pub fn is_bridge(&self, g: &DynamicGraph, u: VertexId, v: VertexId) -> bool {
        self.component_of(g, u, v)
            .is_some_and(|cid| self.members(cid).len() == 2)
    }

    /// Distinct components touching `v`, sorted.
    pub fn components_at(&self, v: VertexId) -> Vec<ComponentId> {
        let mut ids = self.edge_component[v as usize].clone();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Each component as a sorted list of `(a, b)` edges with `a < b`; the list is sorted too.
    pub fn canonical(&self, g: &DynamicGraph) -> Vec<Vec<(VertexId, VertexId)>> {
        let mut groups = vec![Vec::new(); self.members.len()];
        for (u, list) in self.edge_component.iter().enumerate() {
            let u = u as VertexId;
            for (&v, &cid) in g.neighbors(u).iter().zip(list) {
                if u < v {
                    groups[cid as usize].push((u, v));
                }
            }
        }
        for group in &mut groups {
            group.sort_unstable();
        }
        groups.sort();
        groups
    }

    /// Vertices of `cid` together with the component's own edges in local ids
    /// (position in [`members`](Self::members)), optionally leaving one edge out.
    pub fn component_subgraph(
        &self,
        g: &DynamicGraph,
        cid: ComponentId,
        exclude: Option<(VertexId, VertexId)>,
    ) -> CsrGraph {
        let vertices = self.members(cid);
        let local = |x: VertexId| vertices.binary_search(&x).unwrap() as VertexId;
        let mut edges = Vec::new();
        for &x in vertices {
            for (&y, &c) in g.neighbors(x).iter().zip(&self.edge_component[x as usize]) {
                if c != cid || x > y {
                    continue;
                }
                if let Some((a, b)) = exclude {
                    if (a, b) == (x, y) || (b, a) == (x, y) {
                        continue;
                    }
                }
                edges.push((local(x), local(y)));
            }
        }
        CsrGraph::from_edge_list(vertices.len(), &edges)
    }

    /// Updates the partition after `uv` was inserted into `g_after`.
    ///
    /// If some component already touches both endpoints, the new edge joins it
    /// and nothing else changes. Otherwise the partition is rebuilt from scratch.
    pub fn maintain_on_insert(&mut self, g_after: &DynamicGraph, u: VertexId, v: VertexId) -> InsertOutcome {
        while self.edge_component.len() < g_after.vertex_count() {
            self.edge_component.push(Vec::new());
            self.articulation.push(false);
        }
        let at_u = self.components_at(u);
        let shared = self.edge_component[v as usize]
            .iter()
            .copied()
            .find(|c| at_u.binary_search(c).is_ok());
        match shared {
            Some(cid) => {
                for (a, b) in [(u, v), (v, u)] {
                    let pos = g_after.neighbors(a).binary_search(&b).unwrap();
                    self.edge_component[a as usize].insert(pos, cid);
                }
                InsertOutcome { cid, rebuilt: false }
            }
            None => {
                *self = decompose(g_after);
                let cid = self.component_of(g_after, u, v).unwrap();
                InsertOutcome { cid, rebuilt: true }
            }
        }
    }

    /// Rebuilds the partition after `uv` was removed, returning the id the
    /// edge had in the partition before the call.
    pub fn maintain_on_delete(&mut self, g_after: &DynamicGraph, u: VertexId, v: VertexId) -> Result<ComponentId> {
        let cid_before = self.removed_edge_component(g_after, u, v)?;
        *self = decompose(g_after);
        Ok(cid_before)
    }

    fn removed_edge_component(&self, g_after: &DynamicGraph, u: VertexId, v: VertexId) -> Result<ComponentId> {
        let labels = self
            .edge_component
            .get(u as usize)
            .ok_or(Error::MissingEdge(u, v))?;
        let present_before = labels.len() == g_after.degree(u) + 1 && !g_after.has_edge(u, v);
        if !present_before {
            return Err(Error::MissingEdge(u, v));
        }
        let pos = g_after.neighbors(u).binary_search(&v).unwrap_err();
        Ok(labels[pos])
    }
}

/// Hopcroft-Tarjan decomposition in linear time, iterative to survive deep graphs.
pub fn decompose(g: &DynamicGraph) -> BcdPartition {
    let n = g.vertex_count();
    let mut edge_component: Vec<Vec<ComponentId>> =
        (0..n as VertexId).map(|v| vec![NONE; g.degree(v)]).collect();
    let mut members: Vec<Vec<VertexId>> = Vec::new();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![NONE; n];
    let mut mark = vec![NONE; n];
    let mut time = 0u32;
    // (vertex, next neighbor index)
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    // directed adjacency slots (vertex, index) of edges not yet assigned
    let mut edge_stack: Vec<(VertexId, usize)> = Vec::new();

    for root in 0..n as VertexId {
        if disc[root as usize] != 0 || g.degree(root) == 0 {
            continue;
        }
        time += 1;
        disc[root as usize] = time;
        low[root as usize] = time;
        stack.push((root, 0));

        while let Some(top) = stack.last_mut() {
            let (x, i) = *top;
            let neighbors = g.neighbors(x);
            if i < neighbors.len() {
                top.1 += 1;
                let y = neighbors[i];
                if disc[y as usize] == 0 {
                    parent[y as usize] = x;
                    time += 1;
                    disc[y as usize] = time;
                    low[y as usize] = time;
                    edge_stack.push((x, i));
                    stack.push((y, 0));
                } else if y != parent[x as usize] && disc[y as usize] < disc[x as usize] {
                    low[x as usize] = low[x as usize].min(disc[y as usize]);
                    edge_stack.push((x, i));
                }
                continue;
            }

            stack.pop();
            let Some(&(p, _)) = stack.last() else {
                continue;
            };
            low[p as usize] = low[p as usize].min(low[x as usize]);
            if low[x as usize] < disc[p as usize] {
                continue;
            }
            // p separates the subtree of x: everything above the tree edge p-x is one block.
            let cid = members.len() as ComponentId;
            let mut block = Vec::new();
            loop {
                let (a, j) = edge_stack.pop().expect("tree edge must be on the stack");
                let b = g.neighbors(a)[j];
                edge_component[a as usize][j] = cid;
                let k = g.neighbors(b).binary_search(&a).unwrap();
                edge_component[b as usize][k] = cid;
                for w in [a, b] {
                    if mark[w as usize] != cid {
                        mark[w as usize] = cid;
                        block.push(w);
                    }
                }
                if a == p && b == x {
                    break;
                }
            }
            block.sort_unstable();
            members.push(block);
        }
    }

    let articulation = edge_component
        .iter()
        .map(|labels| labels.iter().any(|&c| c != labels[0]))
        .collect();
    BcdPartition {
        edge_component,
        members,
        articulation,
    }
}

/// Representatives of the vertices outside one component, with the `R`/`RF` aggregates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepInfo {
    vertices: Vec<VertexId>,
    rep: Vec<VertexId>,
    rep_distance: Vec<u32>,
    represented: Vec<u32>,
    represented_farness: Vec<u64>,
}

impl RepInfo {
    /// The component's vertex set, sorted. Local indices refer to positions here.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn local_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Representative of `v`, or `None` if `v` cannot reach the component.
    pub fn rep(&self, v: VertexId) -> Option<VertexId> {
        match self.rep[v as usize] {
            NONE => None,
            r => Some(r),
        }
    }

    /// `d(v, rep[v])`, or [`UNREACHABLE`] when `v` has no representative.
    pub fn rep_distance(&self, v: VertexId) -> u32 {
        self.rep_distance[v as usize]
    }

    /// `R[w]`: vertices represented by `w`, itself included. Zero outside the component.
    pub fn represented_count(&self, w: VertexId) -> u32 {
        self.local_index(w).map_or(0, |i| self.represented[i])
    }

    /// `RF[w]`: summed distance from `w` to the vertices it represents.
    pub fn represented_farness(&self, w: VertexId) -> u64 {
        self.local_index(w).map_or(0, |i| self.represented_farness[i])
    }

    /// `R` indexed by local id.
    pub fn counts(&self) -> &[u32] {
        &self.represented
    }

    /// `RF` indexed by local id.
    pub fn farness(&self) -> &[u64] {
        &self.represented_farness
    }
}

/// Computes `rep`, `R` and `RF` for component `cid` of `g`.
///
/// Each articulation vertex of the component runs one breadth-first search
/// over edges outside the component; no two searches meet, so the whole pass
/// is linear. Distances found this way equal distances in `g`.
pub fn build_representatives(g: &DynamicGraph, pi: &BcdPartition, cid: ComponentId) -> RepInfo {
    let n = g.vertex_count();
    let vertices = pi.members(cid).to_vec();
    let mut rep = vec![NONE; n];
    let mut rep_distance = vec![UNREACHABLE; n];
    for &x in &vertices {
        rep[x as usize] = x;
        rep_distance[x as usize] = 0;
    }
    let mut represented = vec![1u32; vertices.len()];
    let mut represented_farness = vec![0u64; vertices.len()];

    let mut queue = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        if !pi.is_articulation(a) {
            continue;
        }
        queue.clear();
        queue.push(a);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&y, &c) in g.neighbors(x).iter().zip(&pi.edge_component[x as usize]) {
                if c == cid || rep[y as usize] != NONE {
                    continue;
                }
                let d = rep_distance[x as usize] + 1;
                rep[y as usize] = a;
                rep_distance[y as usize] = d;
                represented[i] += 1;
                represented_farness[i] += d as u64;
                queue.push(y);
            }
        }
    }

    RepInfo {
        vertices,
        rep,
        rep_distance,
        represented,
        represented_farness,
    }
}
