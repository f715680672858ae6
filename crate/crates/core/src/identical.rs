//! Classes of identical vertices.
//!
//! Two vertices are *open*-identical (type I) when their neighborhoods are
//! equal, and *closed*-identical (type II) when their neighborhoods including
//! themselves are equal. Members of a class are at the same distance from
//! every other vertex, so they share one farness value and one search suffices
//! for the whole class.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{DynamicGraph, VertexId};

pub type ClassId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `N(u) = N(v)`.
    Open,
    /// `{u} ∪ N(u) = {v} ∪ N(v)`.
    Closed,
}

/// Partition of the vertex set into identical-vertex classes of one kind.
#[derive(Clone, Debug)]
pub struct IdenticalClasses {
    kind: IdentityKind,
    class_of: Vec<ClassId>,
    members: Vec<Vec<VertexId>>,
    hash: Vec<u64>,
    by_hash: HashMap<u64, Vec<ClassId>>,
    free: Vec<ClassId>,
}

fn neighborhood_hash(g: &DynamicGraph, kind: IdentityKind, v: VertexId) -> u64 {
    let open = g.neighbors(v).iter().fold(0u64, |acc, &w| acc.wrapping_add(w as u64));
    match kind {
        IdentityKind::Open => open,
        IdentityKind::Closed => open.wrapping_add(v as u64),
    }
}

/// Exact comparison of two neighborhoods.
pub fn same_neighborhood(g: &DynamicGraph, kind: IdentityKind, a: VertexId, b: VertexId) -> bool {
    if a == b {
        return true;
    }
    if g.degree(a) != g.degree(b) {
        return false;
    }
    match kind {
        IdentityKind::Open => g.neighbors(a) == g.neighbors(b),
        IdentityKind::Closed => {
            g.has_edge(a, b)
                && g.neighbors(a)
                    .iter()
                    .filter(|&&w| w != b)
                    .eq(g.neighbors(b).iter().filter(|&&w| w != a))
        }
    }
}

impl IdenticalClasses {
    /// Hashes every neighborhood, sorts by hash, then splits each equal-hash
    /// run by exact comparison.
    pub fn build(g: &DynamicGraph, kind: IdentityKind) -> Self {
        let n = g.vertex_count();
        let hash: Vec<u64> = (0..n as VertexId).map(|v| neighborhood_hash(g, kind, v)).collect();
        let mut order: Vec<VertexId> = (0..n as VertexId).collect();
        order.sort_unstable_by_key(|&v| (hash[v as usize], v));

        let mut classes = IdenticalClasses {
            kind,
            class_of: vec![0; n],
            members: Vec::new(),
            hash,
            by_hash: HashMap::new(),
            free: Vec::new(),
        };
        // equal-hash runs are contiguous, so each run is split against its own buckets
        for &v in &order {
            classes.place(g, v);
        }
        classes
    }

    pub fn kind(&self) -> IdentityKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, v: VertexId) -> ClassId {
        self.class_of[v as usize]
    }

    /// Sorted members of a class.
    pub fn members(&self, class: ClassId) -> &[VertexId] {
        &self.members[class as usize]
    }

    /// Class members of `v`, `v` included.
    pub fn class_members_of(&self, v: VertexId) -> &[VertexId] {
        self.members(self.class_of(v))
    }

    /// All classes as sorted member lists, sorted by smallest member.
    pub fn partition(&self) -> Vec<Vec<VertexId>> {
        let mut out: Vec<Vec<VertexId>> =
            self.members.iter().filter(|m| !m.is_empty()).cloned().collect();
        out.sort();
        out
    }

    /// Classes with more than one member.
    pub fn nontrivial_count(&self) -> usize {
        self.members.iter().filter(|m| m.len() > 1).count()
    }

    /// Re-evaluates `u` and `v` after the edge `uv` changed; `g_after` already
    /// reflects the change. New vertices of `g_after` are added as well.
    pub fn maintain_on_edge_change(&mut self, g_after: &DynamicGraph, u: VertexId, v: VertexId) {
        let old_n = self.class_of.len();
        let n = g_after.vertex_count();
        self.class_of.resize(n, 0);
        self.hash.resize(n, 0);
        for w in old_n as VertexId..n as VertexId {
            if w != u && w != v {
                self.hash[w as usize] = neighborhood_hash(g_after, self.kind, w);
                self.place(g_after, w);
            }
        }
        for w in [u, v] {
            if (w as usize) < old_n {
                self.detach(w);
            }
        }
        for w in [u, v] {
            self.hash[w as usize] = neighborhood_hash(g_after, self.kind, w);
            self.place(g_after, w);
        }
    }

    /// Smallest member in `scope` of every class that intersects `scope`.
    pub fn class_representatives(&self, scope: &[VertexId]) -> BTreeMap<ClassId, VertexId> {
        let mut reps = BTreeMap::new();
        for &v in scope {
            reps.entry(self.class_of(v))
                .and_modify(|r: &mut VertexId| *r = (*r).min(v))
                .or_insert(v);
        }
        reps
    }

    fn place(&mut self, g: &DynamicGraph, v: VertexId) {
        let h = self.hash[v as usize];
        let candidates = self.by_hash.entry(h).or_default();
        let found = candidates
            .iter()
            .copied()
            .find(|&c| same_neighborhood(g, self.kind, v, self.members[c as usize][0]));
        let class = match found {
            Some(c) => c,
            None => {
                let c = match self.free.pop() {
                    Some(c) => c,
                    None => {
                        self.members.push(Vec::new());
                        (self.members.len() - 1) as ClassId
                    }
                };
                candidates.push(c);
                c
            }
        };
        let list = &mut self.members[class as usize];
        if let Err(pos) = list.binary_search(&v) {
            list.insert(pos, v);
        }
        self.class_of[v as usize] = class;
    }

    fn detach(&mut self, v: VertexId) {
        let class = self.class_of[v as usize];
        let list = &mut self.members[class as usize];
        let Ok(pos) = list.binary_search(&v) else {
            return;
        };
        list.remove(pos);
        if list.is_empty() {
            let h = self.hash[v as usize];
            if let Some(ids) = self.by_hash.get_mut(&h) {
                ids.retain(|&c| c != class);
                if ids.is_empty() {
                    self.by_hash.remove(&h);
                }
            }
            self.free.push(class);
        }
    }
}

/// See [`IdenticalClasses::build`].
pub fn build_classes(g: &DynamicGraph, kind: IdentityKind) -> IdenticalClasses {
    IdenticalClasses::build(g, kind)
}
