use alloc::vec::Vec;

use crate::graph::{Edge, Graph, VertexId};
use crate::index::{Clique, CliqueStore, MaximalCliqueIndex, Violation};
use crate::insertion::{IncrementalIndex, InsertionPlan, Method};
use crate::kclique::KCliqueIndex;
use crate::{oracle, Result};

/// Either kind of maintained enumeration, chosen at runtime.
#[derive(Debug, Clone)]
pub enum Tracker {
    Maximal(MaximalCliqueIndex),
    Bounded(KCliqueIndex),
}

impl Tracker {
    /// Bootstraps from `g`; `k = None` tracks all maximal cliques.
    pub fn bootstrap(g: &Graph, k: Option<usize>) -> Result<Self> {
        Ok(match k {
            None => Tracker::Maximal(MaximalCliqueIndex::bootstrap(g)),
            Some(k) => Tracker::Bounded(KCliqueIndex::bootstrap(g, k)?),
        })
    }

    pub fn from_cliques(k: Option<usize>, cliques: Vec<Clique>) -> Result<Self> {
        Ok(match k {
            None => Tracker::Maximal(MaximalCliqueIndex::from_cliques(cliques)?),
            Some(k) => Tracker::Bounded(KCliqueIndex::from_cliques(k, cliques)?),
        })
    }

    pub fn store(&self) -> &CliqueStore {
        IncrementalIndex::store(self)
    }

    pub fn check_consistency(&self, g: &Graph) -> core::result::Result<(), Violation> {
        match self {
            Tracker::Maximal(ix) => ix.check_consistency(g),
            Tracker::Bounded(ix) => ix.check_consistency(g),
        }
    }

    /// What the static oracle says this tracker should hold for `g`.
    pub fn expected(&self, g: &Graph) -> Vec<Clique> {
        match self {
            Tracker::Maximal(_) => oracle::enumerate_maximal_cliques(g),
            Tracker::Bounded(ix) => {
                oracle::enumerate_maximal_k_cliques(g, ix.k()).expect("k >= 1 by construction")
            }
        }
    }
}

impl IncrementalIndex for Tracker {
    fn store(&self) -> &CliqueStore {
        match self {
            Tracker::Maximal(ix) => ix.store(),
            Tracker::Bounded(ix) => ix.store(),
        }
    }

    fn store_mut(&mut self) -> &mut CliqueStore {
        match self {
            Tracker::Maximal(ix) => IncrementalIndex::store_mut(ix),
            Tracker::Bounded(ix) => IncrementalIndex::store_mut(ix),
        }
    }

    fn k(&self) -> Option<usize> {
        match self {
            Tracker::Maximal(_) => None,
            Tracker::Bounded(ix) => Some(ix.k()),
        }
    }

    fn plan(
        &self,
        g_after: &Graph,
        edge: Edge,
        method: Method,
        side: Option<VertexId>,
    ) -> Result<InsertionPlan> {
        match self {
            Tracker::Maximal(ix) => ix.plan(g_after, edge, method, side),
            Tracker::Bounded(ix) => ix.plan(g_after, edge, method, side),
        }
    }
}
