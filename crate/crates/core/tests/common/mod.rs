//! Test-only helpers: a brute-force subset oracle and random graph builders.
#![allow(dead_code)]

use dynmce_core::{Clique, Edge, Graph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every vertex subset checked directly; limited to 15 vertices.
pub fn all_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    let vs: Vec<VertexId> = g.vertices().collect();
    assert!(vs.len() <= 15, "subset oracle is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << vs.len()) {
        let members: Vec<VertexId> = (0..vs.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vs[i])
            .collect();
        let pairwise = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.adjacent(a, b)));
        if pairwise {
            out.push(members);
        }
    }
    out
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.contains(x))
}

pub fn naive_maximal_cliques(g: &Graph) -> Vec<Clique> {
    let all = all_cliques(g);
    let mut out: Vec<Clique> = all
        .iter()
        .filter(|c| !all.iter().any(|d| is_subset(c, d)))
        .map(|c| Clique::new(c.iter().copied()).unwrap())
        .collect();
    out.sort();
    out
}

pub fn naive_maximal_k_cliques(g: &Graph, k: usize) -> Vec<Clique> {
    let all = all_cliques(g);
    let mut out: Vec<Clique> = all
        .iter()
        .filter(|c| c.len() == k || (c.len() < k && !all.iter().any(|d| is_subset(c, d))))
        .map(|c| Clique::new(c.iter().copied()).unwrap())
        .collect();
    out.sort();
    out
}

pub fn clique(ids: &[u32]) -> Clique {
    Clique::new(ids.iter().copied()).unwrap()
}

pub fn edge(a: u32, b: u32) -> Edge {
    Edge::new(a, b).unwrap()
}

/// Erdős–Rényi edge set on `0..n`, in a random insertion order.
pub fn random_edge_order<R: Rng>(rng: &mut R, n: u32, p: f64) -> Vec<Edge> {
    let mut edges: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| edge(a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    edges.shuffle(rng);
    edges
}

/// Complement of the perfect matching `{2i, 2i+1}` on `2m` vertices.
pub fn cocktail_party(m: u32) -> Graph {
    let mut g = Graph::with_vertices(2 * m);
    for a in 0..2 * m {
        for b in a + 1..2 * m {
            if a / 2 != b / 2 {
                g.add_edge(edge(a, b));
            }
        }
    }
    g
}

/// Random simple graph on `1..=max_n` vertices with edges listed in a
/// random order.
pub fn graph_with_order(max_n: u32) -> impl proptest::strategy::Strategy<Value = (u32, Vec<Edge>)> {
    use proptest::prelude::*;
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = (n * n.saturating_sub(1) / 2) as usize;
            (
                Just(n),
                prop::collection::vec(any::<bool>(), pairs),
                any::<u64>(),
            )
        })
        .prop_map(|(n, bits, seed)| {
            use rand::SeedableRng;
            let mut edges: Vec<Edge> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| edge(a, b)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            edges.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            (n, edges)
        })
}

pub fn build(n: u32, edges: &[Edge]) -> Graph {
    let mut g = Graph::with_vertices(n);
    for &e in edges {
        g.add_edge(e);
    }
    g
}
