//! Clique storage with a per-vertex containment index.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::oracle;
use crate::Result;

/// Non-empty vertex set kept in ascending order without repeats.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    /// Sorts and deduplicates `members`.
    pub fn new<I>(members: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<VertexId>,
    {
        let mut members: Vec<VertexId> = members.into_iter().map(Into::into).collect();
        if members.is_empty() {
            return Err(Error::EmptyClique);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Clique(members))
    }

    /// Wraps an already sorted, deduplicated, non-empty vector.
    pub(crate) fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Clique(members)
    }

    pub fn singleton(v: VertexId) -> Self {
        Clique(alloc::vec![v])
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `true` iff every member lies in the closed neighborhood of `w` in `g`.
    pub fn inside_closed_neighborhood(&self, g: &Graph, w: VertexId) -> bool {
        self.0.iter().all(|&m| g.in_closed_neighborhood(w, m))
    }

    pub fn into_members(self) -> Vec<VertexId> {
        self.0
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Handle to a stored clique. Never reused within one store.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueId(pub u64);

/// Exact dedup key: the ascending member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueKey(Vec<VertexId>);

pub fn canonical_key(c: &Clique) -> CliqueKey {
    CliqueKey(c.0.clone())
}

/// One line per clique, members ascending and space separated, lines sorted
/// lexicographically as integer sequences. Every line ends with `\n`.
pub fn canonical_text<'a, I>(cliques: I) -> String
where
    I: IntoIterator<Item = &'a Clique>,
{
    use core::fmt::Write;
    let mut sorted: Vec<&Clique> = cliques.into_iter().collect();
    sorted.sort_unstable();
    let mut out = String::new();
    for c in sorted {
        let _ = writeln!(out, "{c}");
    }
    out
}

/// First invariant violation found by a consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyClique(CliqueId),
    NotAClique(Clique),
    NonMaximal(Clique),
    DuplicateClique(Clique),
    /// `by_vertex` disagrees with the stored member sets at this vertex.
    IndexMismatch(VertexId),
    /// `by_key` disagrees with the stored member sets.
    KeyMismatch(Clique),
    UncoveredVertex(VertexId),
    /// k-index entry larger than `k`.
    Oversized(Clique),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyClique(id) => write!(f, "clique {} is empty", id.0),
            Violation::NotAClique(c) => write!(f, "{{{c}}} is not a clique"),
            Violation::NonMaximal(c) => write!(f, "{{{c}}} is not maximal"),
            Violation::DuplicateClique(c) => write!(f, "{{{c}}} is stored twice"),
            Violation::IndexMismatch(v) => write!(f, "containment index wrong at vertex {v}"),
            Violation::KeyMismatch(c) => write!(f, "key index wrong for {{{c}}}"),
            Violation::UncoveredVertex(v) => write!(f, "vertex {v} is in no stored clique"),
            Violation::Oversized(c) => write!(f, "{{{c}}} exceeds the size bound"),
        }
    }
}

/// Clique store shared by the unbounded and the k-bounded indexes.
#[derive(Debug, Clone, Default)]
pub struct CliqueStore {
    store: BTreeMap<CliqueId, Clique>,
    by_vertex: BTreeMap<VertexId, BTreeSet<CliqueId>>,
    by_key: BTreeMap<CliqueKey, CliqueId>,
    next_id: u64,
}

impl CliqueStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.store.len()
    }

    pub fn is_empty(&self) -> bool {
        self.store.is_empty()
    }

    pub fn get(&self, id: CliqueId) -> Option<&Clique> {
        self.store.get(&id)
    }

    pub fn id_of(&self, c: &Clique) -> Option<CliqueId> {
        self.by_key.get(&canonical_key(c)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CliqueId, &Clique)> + '_ {
        self.store.iter().map(|(&id, c)| (id, c))
    }

    pub fn cliques(&self) -> impl Iterator<Item = &Clique> + '_ {
        self.store.values()
    }

    pub fn knows_vertex(&self, v: VertexId) -> bool {
        self.by_vertex.contains_key(&v)
    }

    /// Ids of the stored cliques containing `u`, ascending.
    pub fn cliques_containing(&self, u: VertexId) -> Result<Vec<CliqueId>> {
        self.by_vertex
            .get(&u)
            .map(|ids| ids.iter().copied().collect())
            .ok_or(Error::UnknownVertex(u))
    }

    /// `|{C_u}|`, zero for unknown vertices.
    pub fn count_containing(&self, u: VertexId) -> usize {
        self.by_vertex.get(&u).map_or(0, BTreeSet::len)
    }

    /// All stored cliques, sorted lexicographically.
    pub fn sorted_cliques(&self) -> Vec<Clique> {
        let mut out: Vec<Clique> = self.store.values().cloned().collect();
        out.sort_unstable();
        out
    }

    pub fn canonical_text(&self) -> String {
        canonical_text(self.store.values())
    }

    /// Removes `remove`, then adds `add`. Validates everything before mutating,
    /// so a failed call leaves the store untouched.
    pub fn apply_delta(&mut self, add: Vec<Clique>, remove: &[CliqueId]) -> Result<Vec<CliqueId>> {
        let mut removing = BTreeSet::new();
        for &id in remove {
            if !self.store.contains_key(&id) || !removing.insert(id) {
                return Err(Error::UnknownClique(id));
            }
        }
        let mut adding = BTreeSet::new();
        for c in &add {
            if c.is_empty() {
                return Err(Error::EmptyClique);
            }
            let key = canonical_key(c);
            let survives = self
                .by_key
                .get(&key)
                .is_some_and(|id| !removing.contains(id));
            if survives || !adding.insert(key) {
                return Err(Error::DuplicateClique(c.clone()));
            }
        }

        for id in removing {
            let c = self.store.remove(&id).expect("validated above");
            self.by_key.remove(&canonical_key(&c));
            for v in c.members() {
                if let Some(ids) = self.by_vertex.get_mut(v) {
                    ids.remove(&id);
                }
            }
        }
        Ok(add.into_iter().map(|c| self.insert_unchecked(c)).collect())
    }

    fn insert_unchecked(&mut self, c: Clique) -> CliqueId {
        let id = CliqueId(self.next_id);
        self.next_id += 1;
        for &v in c.members() {
            self.by_vertex.entry(v).or_default().insert(id);
        }
        self.by_key.insert(canonical_key(&c), id);
        self.store.insert(id, c);
        id
    }

    /// Stores `{v}` if `v` is not yet in any clique. Returns the new id.
    pub(crate) fn ensure_singleton(&mut self, v: VertexId) -> Option<CliqueId> {
        if self.count_containing(v) > 0 {
            return None;
        }
        Some(self.insert_unchecked(Clique::singleton(v)))
    }

    /// Structural checks shared by both indexes: non-empty cliques of `g`,
    /// exact `by_key`/`by_vertex` indexes, and every graph vertex covered.
    pub(crate) fn check_structure(&self, g: &Graph) -> core::result::Result<(), Violation> {
        let mut seen = BTreeSet::new();
        let mut expected: BTreeMap<VertexId, BTreeSet<CliqueId>> = BTreeMap::new();
        for (&id, c) in &self.store {
            if c.is_empty() {
                return Err(Violation::EmptyClique(id));
            }
            if !g.is_clique(c.members()) {
                return Err(Violation::NotAClique(c.clone()));
            }
            if !seen.insert(canonical_key(c)) {
                return Err(Violation::DuplicateClique(c.clone()));
            }
            if self.by_key.get(&canonical_key(c)) != Some(&id) {
                return Err(Violation::KeyMismatch(c.clone()));
            }
            for &v in c.members() {
                expected.entry(v).or_default().insert(id);
            }
        }
        if self.by_key.len() != self.store.len() {
            let stray = self
                .by_key
                .iter()
                .find(|(_, id)| !self.store.contains_key(id))
                .map(|(k, _)| Clique(k.0.clone()));
            if let Some(c) = stray {
                return Err(Violation::KeyMismatch(c));
            }
        }
        let empty = BTreeSet::new();
        let vertices: BTreeSet<VertexId> = expected
            .keys()
            .chain(self.by_vertex.keys())
            .copied()
            .collect();
        for v in vertices {
            let want = expected.get(&v).unwrap_or(&empty);
            let have = self.by_vertex.get(&v).unwrap_or(&empty);
            if want != have {
                return Err(Violation::IndexMismatch(v));
            }
        }
        for v in g.vertices() {
            if self.count_containing(v) == 0 {
                return Err(Violation::UncoveredVertex(v));
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn corrupt_by_vertex(&mut self, v: VertexId) {
        self.by_vertex.remove(&v);
    }
}

/// The maximal cliques of a graph together with the `{C_u}` lists.
#[derive(Debug, Clone, Default)]
pub struct MaximalCliqueIndex {
    store: CliqueStore,
}

impl MaximalCliqueIndex {
    /// Index holding exactly the maximal cliques of `g` (singletons for
    /// isolated vertices).
    pub fn bootstrap(g: &Graph) -> Self {
        let mut store = CliqueStore::new();
        for c in oracle::enumerate_maximal_cliques(g) {
            store.insert_unchecked(c);
        }
        MaximalCliqueIndex { store }
    }

    /// Loads a previously computed enumeration without verifying maximality;
    /// use [`check_consistency`](Self::check_consistency) for that.
    pub fn from_cliques<I: IntoIterator<Item = Clique>>(cliques: I) -> Result<Self> {
        let mut store = CliqueStore::new();
        store.apply_delta(cliques.into_iter().collect(), &[])?;
        Ok(MaximalCliqueIndex { store })
    }

    pub fn store(&self) -> &CliqueStore {
        &self.store
    }

    pub fn cliques_containing(&self, u: VertexId) -> Result<Vec<CliqueId>> {
        self.store.cliques_containing(u)
    }

    pub fn apply_delta(&mut self, add: Vec<Clique>, remove: &[CliqueId]) -> Result<Vec<CliqueId>> {
        self.store.apply_delta(add, remove)
    }

    pub(crate) fn store_mut(&mut self) -> &mut CliqueStore {
        &mut self.store
    }

    /// Verifies every index invariant and the maximality of each stored clique.
    pub fn check_consistency(&self, g: &Graph) -> core::result::Result<(), Violation> {
        self.store.check_structure(g)?;
        for c in self.store.cliques() {
            if !g.is_maximal_clique(c.members()) {
                return Err(Violation::NonMaximal(c.clone()));
            }
        }
        Ok(())
    }
}

impl core::ops::Deref for MaximalCliqueIndex {
    type Target = CliqueStore;

    fn deref(&self) -> &CliqueStore {
        &self.store
    }
}
