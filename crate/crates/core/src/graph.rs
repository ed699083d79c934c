//! Undirected simple graph with sorted adjacency and closed-neighborhood queries.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// Vertex identifier. Ordering is used for every canonical form and tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

/// Undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> [VertexId; 2] {
        [self.u, self.v]
    }

    pub fn has_endpoint(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`. `w` must be an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        debug_assert!(self.has_endpoint(w));
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeInsertion {
    NewEdge,
    AlreadyPresent,
}

/// Mutable undirected simple graph.
///
/// Each vertex maps to its open neighbors kept sorted by id, so intersections
/// are linear merges and iteration order is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: BTreeMap<VertexId, Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the vertices `0..n` with no edges.
    pub fn with_vertices(n: u32) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(VertexId(v));
        }
        g
    }

    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::new();
        for (a, b) in edges {
            g.add_edge(Edge::new(a, b)?);
        }
        Ok(g)
    }

    /// Registers `v`; returns `false` if it was already known.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.adjacency.contains_key(&v) {
            return false;
        }
        self.adjacency.insert(v, Vec::new());
        true
    }

    /// Inserts `e`, registering unknown endpoints.
    pub fn add_edge(&mut self, e: Edge) -> EdgeInsertion {
        if self.contains_edge(e) {
            return EdgeInsertion::AlreadyPresent;
        }
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            let list = self.adjacency.entry(a).or_default();
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        self.edge_count += 1;
        EdgeInsertion::NewEdge
    }

    /// Convenience wrapper that builds the edge first; rejects self-loops.
    pub fn add_edge_between(
        &mut self,
        a: impl Into<VertexId>,
        b: impl Into<VertexId>,
    ) -> Result<EdgeInsertion> {
        Ok(self.add_edge(Edge::new(a, b)?))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.adjacent(e.u, e.v)
    }

    /// `true` iff `a` and `b` are distinct and joined by an edge.
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        let (short, other) = match (self.adjacency.get(&a), self.adjacency.get(&b)) {
            (Some(na), Some(nb)) if na.len() <= nb.len() => (na, b),
            (Some(_), Some(nb)) => (nb, a),
            _ => return false,
        };
        short.binary_search(&other).is_ok()
    }

    /// `w ∈ N(u)` for the closed neighborhood; unknown vertices have `N(u) = {u}`.
    pub fn in_closed_neighborhood(&self, u: VertexId, w: VertexId) -> bool {
        u == w || self.adjacent(u, w)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().flat_map(|(&u, ns)| {
            ns.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| Edge { u, v })
        })
    }

    /// Open neighbors of `u`, sorted.
    pub fn neighbors(&self, u: VertexId) -> Result<&[VertexId]> {
        self.adjacency
            .get(&u)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(u))
    }

    pub fn degree(&self, u: VertexId) -> Result<usize> {
        self.neighbors(u).map(<[_]>::len)
    }

    /// `N(u) = adjacency[u] ∪ {u}`, sorted.
    pub fn neighbors_closed(&self, u: VertexId) -> Result<Vec<VertexId>> {
        let open = self.neighbors(u)?;
        let mut out = Vec::with_capacity(open.len() + 1);
        let pos = open.partition_point(|&w| w < u);
        out.extend_from_slice(&open[..pos]);
        out.push(u);
        out.extend_from_slice(&open[pos..]);
        Ok(out)
    }

    /// `N(u) ∩ N(v)` for closed neighborhoods, scanning the smaller one.
    pub fn common_neighbors_closed(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        let nu = self.neighbors_closed(u)?;
        let nv = self.neighbors_closed(v)?;
        let (small, probe) = if nu.len() <= nv.len() {
            (nu, v)
        } else {
            (nv, u)
        };
        Ok(small
            .into_iter()
            .filter(|&w| self.in_closed_neighborhood(probe, w))
            .collect())
    }

    /// Definitional maximality test for a clique `members`: no vertex outside
    /// it is adjacent to all of it. Intersects closed neighborhoods starting
    /// from the member of smallest degree and stops as soon as only the clique
    /// itself is left. `members` must be a clique of `self`.
    pub fn is_maximal_clique(&self, members: &[VertexId]) -> bool {
        let Some(&start) = members
            .iter()
            .min_by_key(|&&m| (self.degree(m).unwrap_or(usize::MAX), m))
        else {
            return false;
        };
        let Ok(mut common) = self.neighbors_closed(start) else {
            return false;
        };
        for &m in members {
            if common.len() <= members.len() {
                break;
            }
            if m != start {
                common.retain(|&w| self.in_closed_neighborhood(m, w));
            }
        }
        common.len() == members.len()
    }

    /// `true` iff the members are pairwise adjacent. Unknown vertices fail.
    pub fn is_clique(&self, members: &[VertexId]) -> bool {
        if members.iter().any(|&m| !self.contains_vertex(m)) {
            return false;
        }
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }
}

/// Intersection of two ascending slices.
pub(crate) fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
