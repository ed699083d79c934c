//! Updating the maximal clique enumeration after inserting one edge.
//!
//! After `uv` is inserted, every clique that stops being maximal contains `u`
//! or `v`, and every new maximal clique contains both and lies inside
//! `N(u) ∩ N(v)`. New cliques are found among candidates built from the old
//! cliques through one endpoint:
//!
//! * [`Method::Proposed`]: `(C_s ∩ N(t)) ∪ {u, v}` for each `C_s` through the
//!   generation side `s`, `t` the other endpoint. One candidate per clique.
//! * [`Method::Existing`]: `(C_u ∩ C_v) ∪ {u, v}` for each pair, which is
//!   `|{C_u}|·|{C_v}|` candidates.
//!
//! Candidates are deduplicated, filtered by [`is_maximal_in`], and the old
//! cliques `D ∋ u` with `D ⊆ N(v)` (and symmetrically) are retired.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::graph::{Edge, Graph, VertexId};
use crate::index::{Clique, CliqueId, CliqueStore, MaximalCliqueIndex};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// One-sided generation from the endpoint with fewer cliques.
    Proposed,
    /// Pairwise intersections of the cliques through both endpoints.
    Existing,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Proposed => "proposed",
            Method::Existing => "existing",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Monotonic nanosecond source. The core crate has no clock of its own.
pub type Clock = fn() -> u64;

pub fn no_clock() -> u64 {
    0
}

/// What an insertion would change, computed read-only against the index and
/// the graph that already contains the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPlan {
    pub edge: Edge,
    pub method: Method,
    pub side: Option<VertexId>,
    pub candidates_generated: usize,
    pub candidates_after_dedup: usize,
    /// Sorted.
    pub added: Vec<Clique>,
    /// Sorted by clique.
    pub removed: Vec<(CliqueId, Clique)>,
}

/// Audit record of one insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionReport {
    pub edge: Edge,
    pub method: Method,
    /// Generation side; `None` for [`Method::Existing`] and for no-ops.
    pub side: Option<VertexId>,
    /// Size bound when maintaining maximal k-cliques.
    pub k: Option<usize>,
    /// The edge was already present and nothing changed.
    pub already_present: bool,
    pub candidates_generated: usize,
    pub candidates_after_dedup: usize,
    pub added: Vec<Clique>,
    pub removed: Vec<Clique>,
    /// Number of stored cliques after the update.
    pub total_cliques: usize,
    pub elapsed_ns: u64,
    /// Batch round, when the insertion ran as part of a schedule.
    pub round: Option<usize>,
}

impl InsertionReport {
    fn no_op(edge: Edge, method: Method, k: Option<usize>, total_cliques: usize) -> Self {
        InsertionReport {
            edge,
            method,
            side: None,
            k,
            already_present: true,
            candidates_generated: 0,
            candidates_after_dedup: 0,
            added: Vec::new(),
            removed: Vec::new(),
            total_cliques,
            elapsed_ns: 0,
            round: None,
        }
    }

    pub(crate) fn from_plan(plan: InsertionPlan, k: Option<usize>, total_cliques: usize) -> Self {
        InsertionReport {
            edge: plan.edge,
            method: plan.method,
            side: plan.side,
            k,
            already_present: false,
            candidates_generated: plan.candidates_generated,
            candidates_after_dedup: plan.candidates_after_dedup,
            added: plan.added,
            removed: plan.removed.into_iter().map(|(_, c)| c).collect(),
            total_cliques,
            elapsed_ns: 0,
            round: None,
        }
    }
}

/// An enumeration that can be maintained under edge insertion.
pub trait IncrementalIndex {
    fn store(&self) -> &CliqueStore;

    fn store_mut(&mut self) -> &mut CliqueStore;

    /// Size bound, `None` for the unbounded enumeration.
    fn k(&self) -> Option<usize>;

    /// Computes the delta for inserting `edge`. `g_after` must already contain
    /// `edge`; `self` must reflect the graph without it. `side` forces the
    /// generation side for [`Method::Proposed`].
    fn plan(
        &self,
        g_after: &Graph,
        edge: Edge,
        method: Method,
        side: Option<VertexId>,
    ) -> Result<InsertionPlan>;

    /// Applies a plan; atomic on failure.
    fn commit(&mut self, plan: &InsertionPlan) -> Result<Vec<CliqueId>> {
        let remove: Vec<CliqueId> = plan.removed.iter().map(|(id, _)| *id).collect();
        self.store_mut().apply_delta(plan.added.clone(), &remove)
    }
}

impl IncrementalIndex for MaximalCliqueIndex {
    fn store(&self) -> &CliqueStore {
        MaximalCliqueIndex::store(self)
    }

    fn store_mut(&mut self) -> &mut CliqueStore {
        MaximalCliqueIndex::store_mut(self)
    }

    fn k(&self) -> Option<usize> {
        None
    }

    fn plan(
        &self,
        g_after: &Graph,
        edge: Edge,
        method: Method,
        side: Option<VertexId>,
    ) -> Result<InsertionPlan> {
        let (u, v) = (edge.u(), edge.v());
        let store = self.store();
        let (side, candidates) = match method {
            Method::Proposed => {
                let side = resolve_side(store, edge, side)?;
                (
                    Some(side),
                    generate_candidates_proposed(g_after, store, u, v, side)?,
                )
            }
            Method::Existing => (None, generate_candidates_existing(g_after, store, u, v)?),
        };
        let candidates_generated = candidates.len();
        let unique: BTreeSet<Clique> = candidates.into_iter().collect();
        let candidates_after_dedup = unique.len();
        let added = unique
            .into_iter()
            .filter(|c| is_maximal_in(g_after, c))
            .collect();
        Ok(InsertionPlan {
            edge,
            method,
            side,
            candidates_generated,
            candidates_after_dedup,
            added,
            removed: stale_entries(g_after, store, edge, None),
        })
    }
}

pub(crate) fn resolve_side(
    store: &CliqueStore,
    edge: Edge,
    forced: Option<VertexId>,
) -> Result<VertexId> {
    match forced {
        Some(s) if edge.has_endpoint(s) => Ok(s),
        Some(s) => Err(Error::SideNotEndpoint { side: s, edge }),
        None => Ok(choose_side(store, edge.u(), edge.v())),
    }
}

/// Endpoint with fewer containing cliques; the smaller id on ties.
pub fn choose_side(store: &CliqueStore, u: VertexId, v: VertexId) -> VertexId {
    let cu = (store.count_containing(u), u);
    let cv = (store.count_containing(v), v);
    if cu <= cv {
        u
    } else {
        v
    }
}

/// `(C_s ∩ N(t)) ∪ {u, v}` for every stored `C_s` containing `side`, where
/// `t` is the other endpoint. One candidate per clique, duplicates kept.
pub fn generate_candidates_proposed(
    g: &Graph,
    store: &CliqueStore,
    u: VertexId,
    v: VertexId,
    side: VertexId,
) -> Result<Vec<Clique>> {
    let edge = Edge::new(u, v)?;
    if !edge.has_endpoint(side) {
        return Err(Error::SideNotEndpoint { side, edge });
    }
    let other = edge.other(side);
    let ids = store.cliques_containing(side)?;
    Ok(ids
        .into_iter()
        .map(|id| {
            let c = store.get(id).expect("containment index is exact");
            with_endpoints(
                c.members()
                    .iter()
                    .copied()
                    .filter(|&w| g.in_closed_neighborhood(other, w)),
                edge,
            )
        })
        .collect())
}

/// `(C_u ∩ C_v) ∪ {u, v}` for every pair of stored cliques through `u` and `v`.
pub fn generate_candidates_existing(
    _g: &Graph,
    store: &CliqueStore,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<Clique>> {
    let edge = Edge::new(u, v)?;
    let through_u = store.cliques_containing(u)?;
    let through_v = store.cliques_containing(v)?;
    let mut out = Vec::with_capacity(through_u.len() * through_v.len());
    for &a in &through_u {
        let ca = store.get(a).expect("containment index is exact");
        for &b in &through_v {
            let cb = store.get(b).expect("containment index is exact");
            let common = crate::graph::intersect_sorted(ca.members(), cb.members());
            out.push(with_endpoints(common.into_iter(), edge));
        }
    }
    Ok(out)
}

fn with_endpoints(members: impl Iterator<Item = VertexId>, edge: Edge) -> Clique {
    let mut m: Vec<VertexId> = members.collect();
    for w in edge.endpoints() {
        if let Err(pos) = m.binary_search(&w) {
            m.insert(pos, w);
        }
    }
    Clique::from_sorted(m)
}

/// `true` iff no vertex outside `c` is adjacent to every member of `c`.
/// `c` must be a clique of `g_after`.
pub fn is_maximal_in(g_after: &Graph, c: &Clique) -> bool {
    g_after.is_maximal_clique(c.members())
}

/// Stored cliques that stop being maximal once `uv` is in `g_after`:
/// `D ∋ u` with `D ⊆ N(v)`, and `D ∋ v` with `D ⊆ N(u)`.
pub fn remove_stale(
    g_after: &Graph,
    ix: &MaximalCliqueIndex,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<CliqueId>> {
    let edge = Edge::new(u, v)?;
    Ok(stale_entries(g_after, ix.store(), edge, None)
        .into_iter()
        .map(|(id, _)| id)
        .collect())
}

/// Shared by both indexes; `below` restricts to entries smaller than `k`.
pub(crate) fn stale_entries(
    g_after: &Graph,
    store: &CliqueStore,
    edge: Edge,
    below: Option<usize>,
) -> Vec<(CliqueId, Clique)> {
    let mut out = BTreeSet::new();
    for end in edge.endpoints() {
        let other = edge.other(end);
        for (id, c) in store
            .cliques_containing(end)
            .unwrap_or_default()
            .into_iter()
            .filter_map(|id| store.get(id).map(|c| (id, c)))
        {
            if below.is_some_and(|k| c.len() >= k) {
                continue;
            }
            if c.inside_closed_neighborhood(g_after, other) {
                out.insert((c.clone(), id));
            }
        }
    }
    out.into_iter().map(|(c, id)| (id, c)).collect()
}

/// Registers `v` in the graph and, if new to the index, stores `{v}`.
pub fn register_vertex<I: IncrementalIndex + ?Sized>(g: &mut Graph, ix: &mut I, v: VertexId) {
    g.add_vertex(v);
    ix.store_mut().ensure_singleton(v);
}

/// Inserts `e` into `g` and updates the enumeration held by `ix`.
///
/// Unknown endpoints are registered first (as isolated vertices with singleton
/// cliques). Inserting an edge that is already present returns a no-op report.
pub fn insert_edge<I: IncrementalIndex + ?Sized>(
    g: &mut Graph,
    ix: &mut I,
    e: Edge,
    method: Method,
    side: Option<VertexId>,
    clock: Clock,
) -> Result<InsertionReport> {
    for w in e.endpoints() {
        register_vertex(g, ix, w);
    }
    if g.contains_edge(e) {
        return Ok(InsertionReport::no_op(e, method, ix.k(), ix.store().len()));
    }
    let start = clock();
    g.add_edge(e);
    let plan = match ix.plan(g, e, method, side) {
        Ok(plan) => plan,
        Err(err) => {
            rollback_edge(g, e);
            return Err(err);
        }
    };
    if let Err(err) = ix.commit(&plan) {
        rollback_edge(g, e);
        return Err(err);
    }
    let elapsed = clock().saturating_sub(start);
    let mut report = InsertionReport::from_plan(plan, ix.k(), ix.store().len());
    report.elapsed_ns = elapsed;
    Ok(report)
}

fn rollback_edge(g: &mut Graph, e: Edge) {
    let mut rebuilt = Graph::new();
    for v in g.vertices() {
        rebuilt.add_vertex(v);
    }
    for f in g.edges().filter(|&f| f != e) {
        rebuilt.add_edge(f);
    }
    *g = rebuilt;
}

/// Full insertion pipeline on the unbounded index.
pub fn insert_edge_update(
    g: &mut Graph,
    ix: &mut MaximalCliqueIndex,
    e: Edge,
    method: Method,
) -> Result<InsertionReport> {
    insert_edge(g, ix, e, method, None, no_clock)
}
