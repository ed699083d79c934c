//! From-scratch enumerators. Used to bootstrap an index and as ground truth.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{intersect_sorted, Graph, VertexId};
use crate::index::Clique;
use crate::Result;

/// All maximal cliques of `g`, isolated vertices included as singletons,
/// sorted lexicographically.
///
/// Recursive enumeration with pivoting: the pivot is the vertex of `P ∪ X`
/// with the most neighbors in `P` (smallest id on ties), and only vertices of
/// `P` outside the pivot's neighborhood are branched on.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<Clique> {
    let mut out = Vec::new();
    let candidates: Vec<VertexId> = g.vertices().collect();
    expand(g, &mut Vec::new(), candidates, Vec::new(), &mut out);
    out.sort_unstable();
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<VertexId>,
    mut candidates: Vec<VertexId>,
    mut excluded: Vec<VertexId>,
    out: &mut Vec<Clique>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && !current.is_empty() {
            out.push(Clique::new(current.iter().copied()).expect("non-empty"));
        }
        return;
    }

    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&w| {
            let ns = g.neighbors(w).unwrap_or(&[]);
            (
                intersect_sorted(&candidates, ns).len(),
                core::cmp::Reverse(w),
            )
        })
        .expect("candidates is non-empty");
    let pivot_ns = g.neighbors(pivot).unwrap_or(&[]);
    let branch: Vec<VertexId> = candidates
        .iter()
        .copied()
        .filter(|w| pivot_ns.binary_search(w).is_err())
        .collect();

    for v in branch {
        let ns = g.neighbors(v).unwrap_or(&[]);
        current.push(v);
        expand(
            g,
            current,
            intersect_sorted(&candidates, ns),
            intersect_sorted(&excluded, ns),
            out,
        );
        current.pop();
        if let Ok(pos) = candidates.binary_search(&v) {
            candidates.remove(pos);
        }
        let pos = excluded.binary_search(&v).unwrap_err();
        excluded.insert(pos, v);
    }
}

/// Maximal k-cliques: every clique of exactly `k` vertices plus every maximal
/// clique with fewer than `k` vertices. Sorted lexicographically.
pub fn enumerate_maximal_k_cliques(g: &Graph, k: usize) -> Result<Vec<Clique>> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let mut out: Vec<Clique> = enumerate_maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() < k)
        .collect();
    let mut current = Vec::with_capacity(k);
    for v in g.vertices() {
        current.push(v);
        let later: Vec<VertexId> = g
            .neighbors(v)
            .unwrap_or(&[])
            .iter()
            .copied()
            .filter(|&w| w > v)
            .collect();
        extend_to_size(g, &mut current, &later, k, &mut out);
        current.pop();
    }
    out.sort_unstable();
    Ok(out)
}

/// Pushes every clique of size `k` that extends `current` (ascending) using
/// vertices of `candidates`, all larger than the last member.
fn extend_to_size(
    g: &Graph,
    current: &mut Vec<VertexId>,
    candidates: &[VertexId],
    k: usize,
    out: &mut Vec<Clique>,
) {
    if current.len() == k {
        out.push(Clique::from_sorted(current.clone()));
        return;
    }
    if current.len() + candidates.len() < k {
        return;
    }
    for (i, &w) in candidates.iter().enumerate() {
        let ns = g.neighbors(w).unwrap_or(&[]);
        let next = intersect_sorted(&candidates[i + 1..], ns);
        current.push(w);
        extend_to_size(g, current, &next, k, out);
        current.pop();
    }
}
