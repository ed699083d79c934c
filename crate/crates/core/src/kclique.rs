//! Maintenance of maximal k-cliques: cliques of exactly `k` vertices plus
//! maximal cliques smaller than `k`.
//!
//! Candidates are generated one-sidedly as in the unbounded case and have at
//! most `k + 1` vertices. A candidate below `k` goes through the maximality
//! test, one of exactly `k` is accepted as is, and one of `k + 1` is expanded
//! into its `k`-subsets through both endpoints without any test.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Edge, Graph, VertexId};
use crate::index::{Clique, CliqueId, CliqueStore, Violation};
use crate::insertion::{
    generate_candidates_existing, generate_candidates_proposed, insert_edge, is_maximal_in,
    no_clock, resolve_side, stale_entries, IncrementalIndex, InsertionPlan, InsertionReport,
    Method,
};
use crate::oracle;
use crate::Result;

#[derive(Debug, Clone)]
pub struct KCliqueIndex {
    k: usize,
    store: CliqueStore,
}

impl KCliqueIndex {
    pub fn bootstrap(g: &Graph, k: usize) -> Result<Self> {
        Self::from_cliques(k, oracle::enumerate_maximal_k_cliques(g, k)?)
    }

    /// Loads a stored enumeration; sizes and maximality are not verified here.
    pub fn from_cliques<I: IntoIterator<Item = Clique>>(k: usize, cliques: I) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK(k));
        }
        let mut store = CliqueStore::new();
        store.apply_delta(cliques.into_iter().collect(), &[])?;
        Ok(KCliqueIndex { k, store })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn store(&self) -> &CliqueStore {
        &self.store
    }

    pub fn cliques_containing(&self, u: VertexId) -> Result<Vec<CliqueId>> {
        self.store.cliques_containing(u)
    }

    pub fn check_consistency(&self, g: &Graph) -> core::result::Result<(), Violation> {
        self.store.check_structure(g)?;
        for c in self.store.cliques() {
            if c.len() > self.k {
                return Err(Violation::Oversized(c.clone()));
            }
            if c.len() < self.k && !g.is_maximal_clique(c.members()) {
                return Err(Violation::NonMaximal(c.clone()));
            }
        }
        Ok(())
    }
}

impl core::ops::Deref for KCliqueIndex {
    type Target = CliqueStore;

    fn deref(&self) -> &CliqueStore {
        &self.store
    }
}

impl IncrementalIndex for KCliqueIndex {
    fn store(&self) -> &CliqueStore {
        &self.store
    }

    fn store_mut(&mut self) -> &mut CliqueStore {
        &mut self.store
    }

    fn k(&self) -> Option<usize> {
        Some(self.k)
    }

    fn plan(
        &self,
        g_after: &Graph,
        edge: Edge,
        method: Method,
        side: Option<VertexId>,
    ) -> Result<InsertionPlan> {
        let (u, v) = (edge.u(), edge.v());
        let (side, candidates) = match method {
            Method::Proposed => {
                let side = resolve_side(&self.store, edge, side)?;
                (
                    Some(side),
                    generate_candidates_proposed(g_after, &self.store, u, v, side)?,
                )
            }
            Method::Existing => (
                None,
                generate_candidates_existing(g_after, &self.store, u, v)?,
            ),
        };
        let candidates_generated = candidates.len();
        let unique: BTreeSet<Clique> = candidates.into_iter().collect();
        let candidates_after_dedup = unique.len();

        let mut accepted = BTreeSet::new();
        for c in unique {
            if c.len() < self.k {
                if is_maximal_in(g_after, &c) {
                    accepted.insert(c);
                }
            } else if c.len() == self.k {
                accepted.insert(c);
            } else {
                accepted.extend(subsets_through_edge(&c, self.k, edge));
            }
        }
        let added = accepted
            .into_iter()
            .filter(|c| self.store.id_of(c).is_none())
            .collect();

        Ok(InsertionPlan {
            edge,
            method,
            side,
            candidates_generated,
            candidates_after_dedup,
            added,
            removed: stale_entries(g_after, &self.store, edge, Some(self.k)),
        })
    }
}

/// One-sided candidates for the k-bounded index: `(C_s ∩ N(t)) ∪ {u, v}` for
/// each stored `C_s` through `side`. `g` already contains `uv`.
pub fn k_generate_candidates(
    g: &Graph,
    ix: &KCliqueIndex,
    u: VertexId,
    v: VertexId,
    side: VertexId,
) -> Result<Vec<Clique>> {
    generate_candidates_proposed(g, &ix.store, u, v, side)
}

/// The `k`-subsets of a `(k + 1)`-vertex candidate that keep both `u` and `v`,
/// sorted. Subsets missing an endpoint were already `k`-cliques before the
/// insertion.
pub fn k_expand_oversized(c: &Clique, k: usize, u: VertexId, v: VertexId) -> Result<Vec<Clique>> {
    if c.len() != k + 1 {
        return Err(Error::NotOversized { k, len: c.len() });
    }
    for w in [u, v] {
        if !c.contains(w) {
            return Err(Error::EndpointMissing(w));
        }
    }
    let mut out: Vec<Clique> = c
        .members()
        .iter()
        .filter(|&&w| w != u && w != v)
        .map(|&drop| {
            Clique::from_sorted(c.members().iter().copied().filter(|&w| w != drop).collect())
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// All `k`-subsets of `c` containing both endpoints of `edge`. Same as
/// [`k_expand_oversized`] for `|c| = k + 1`, general otherwise.
fn subsets_through_edge(c: &Clique, k: usize, edge: Edge) -> Vec<Clique> {
    let rest: Vec<VertexId> = c
        .members()
        .iter()
        .copied()
        .filter(|&w| !edge.has_endpoint(w))
        .collect();
    let mut out = Vec::new();
    if k < 2 {
        return out;
    }
    let mut pick = Vec::with_capacity(k - 2);
    choose(&rest, k - 2, 0, &mut pick, &mut |chosen| {
        let mut m: Vec<VertexId> = chosen.to_vec();
        m.extend(edge.endpoints());
        m.sort_unstable();
        out.push(Clique::from_sorted(m));
    });
    out
}

fn choose(
    items: &[VertexId],
    want: usize,
    from: usize,
    pick: &mut Vec<VertexId>,
    emit: &mut impl FnMut(&[VertexId]),
) {
    if pick.len() == want {
        emit(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < want - pick.len() {
            break;
        }
        pick.push(items[i]);
        choose(items, want, i + 1, pick, emit);
        pick.pop();
    }
}

/// Insertion pipeline for the k-bounded index, one-sided generation.
pub fn k_insert_edge_update(
    g: &mut Graph,
    ix: &mut KCliqueIndex,
    e: Edge,
) -> Result<InsertionReport> {
    insert_edge(g, ix, e, Method::Proposed, None, no_clock)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_maximal_k_cliques;
    use alloc::vec;

    fn clique(ids: &[u32]) -> Clique {
        Clique::new(ids.iter().copied()).unwrap()
    }

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    fn edge(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges([(0, 1), (1, 2)]).unwrap()
    }

    fn k4_minus_01() -> Graph {
        Graph::from_edges([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn candidates_are_at_most_k_plus_one() {
        let ix = KCliqueIndex::bootstrap(&p3(), 2).unwrap();
        let mut g = p3();
        g.add_edge(edge(0, 2));
        assert_eq!(
            k_generate_candidates(&g, &ix, vid(0), vid(2), vid(0)).unwrap(),
            vec![clique(&[0, 1, 2])]
        );

        let ix = KCliqueIndex::bootstrap(&k4_minus_01(), 3).unwrap();
        let mut g = k4_minus_01();
        g.add_edge(edge(0, 1));
        assert_eq!(
            k_generate_candidates(&g, &ix, vid(0), vid(1), vid(0)).unwrap(),
            vec![clique(&[0, 1, 2, 3])]
        );

        let ix = KCliqueIndex::bootstrap(&p3(), 5).unwrap();
        let mut g = p3();
        g.add_edge(edge(0, 2));
        assert_eq!(
            k_generate_candidates(&g, &ix, vid(0), vid(2), vid(0)).unwrap(),
            vec![clique(&[0, 1, 2])]
        );
    }

    #[test]
    fn oversized_expansion() {
        assert_eq!(
            k_expand_oversized(&clique(&[0, 1, 2]), 2, vid(0), vid(2)).unwrap(),
            vec![clique(&[0, 2])]
        );
        assert_eq!(
            k_expand_oversized(&clique(&[0, 1, 2, 3]), 3, vid(0), vid(1)).unwrap(),
            vec![clique(&[0, 1, 2]), clique(&[0, 1, 3])]
        );
        assert_eq!(
            k_expand_oversized(&clique(&[0, 1, 2, 3, 4]), 4, vid(0), vid(1)).unwrap(),
            vec![
                clique(&[0, 1, 2, 3]),
                clique(&[0, 1, 2, 4]),
                clique(&[0, 1, 3, 4])
            ]
        );
        assert_eq!(
            k_expand_oversized(&clique(&[0, 1, 2]), 3, vid(0), vid(1)),
            Err(Error::NotOversized { k: 3, len: 3 })
        );
        assert_eq!(
            k_expand_oversized(&clique(&[0, 1, 2]), 2, vid(0), vid(5)),
            Err(Error::EndpointMissing(vid(5)))
        );
    }

    #[test]
    fn general_subsets_match_expansion() {
        let c = clique(&[0, 1, 2, 3, 4]);
        let mut got = subsets_through_edge(&c, 4, edge(0, 1));
        got.sort();
        assert_eq!(got, k_expand_oversized(&c, 4, vid(0), vid(1)).unwrap());
        assert_eq!(subsets_through_edge(&c, 3, edge(0, 1)).len(), 3);
    }

    #[test]
    fn path_with_k2() {
        let mut g = p3();
        let mut ix = KCliqueIndex::bootstrap(&g, 2).unwrap();
        let r = k_insert_edge_update(&mut g, &mut ix, edge(0, 2)).unwrap();
        assert_eq!(r.added, vec![clique(&[0, 2])]);
        assert!(r.removed.is_empty());
        assert_eq!(r.k, Some(2));
        assert_eq!(
            ix.sorted_cliques(),
            vec![clique(&[0, 1]), clique(&[0, 2]), clique(&[1, 2])]
        );
    }

    #[test]
    fn k4_minus_edge_with_k3() {
        let mut g = k4_minus_01();
        let mut ix = KCliqueIndex::bootstrap(&g, 3).unwrap();
        let r = k_insert_edge_update(&mut g, &mut ix, edge(0, 1)).unwrap();
        assert_eq!(r.added, vec![clique(&[0, 1, 2]), clique(&[0, 1, 3])]);
        assert!(r.removed.is_empty());
        assert_eq!(
            ix.sorted_cliques(),
            enumerate_maximal_k_cliques(&g, 3).unwrap()
        );
        assert_eq!(ix.len(), 4);
    }

    #[test]
    fn below_k_behaves_like_unbounded() {
        let mut g = Graph::with_vertices(2);
        let mut ix = KCliqueIndex::bootstrap(&g, 3).unwrap();
        let r = k_insert_edge_update(&mut g, &mut ix, edge(0, 1)).unwrap();
        assert_eq!(r.added, vec![clique(&[0, 1])]);
        assert_eq!(r.removed, vec![clique(&[0]), clique(&[1])]);
    }

    #[test]
    fn consistency_checks() {
        let g = k4_minus_01();
        let ix = KCliqueIndex::bootstrap(&g, 3).unwrap();
        assert_eq!(ix.check_consistency(&g), Ok(()));
        let big = KCliqueIndex::from_cliques(2, [clique(&[0, 2, 3]), clique(&[1, 2, 3])]).unwrap();
        assert_eq!(
            big.check_consistency(&g),
            Err(Violation::Oversized(clique(&[0, 2, 3])))
        );
        let small = KCliqueIndex::from_cliques(4, [clique(&[0, 2]), clique(&[1, 2, 3])]).unwrap();
        assert_eq!(
            small.check_consistency(&g),
            Err(Violation::NonMaximal(clique(&[0, 2])))
        );
        assert!(matches!(
            KCliqueIndex::bootstrap(&g, 0),
            Err(Error::InvalidK(0))
        ));
    }
}
