mod common;

use common::*;
use dynmce_core::batch::ScheduledEdge;
use dynmce_core::{
    apply_batch, edges_independent, enumerate_maximal_cliques, insert_edge_update, schedule_batch,
    schedule_is_valid, Edge, Graph, IndependenceMode, MaximalCliqueIndex, Method,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Closed-neighborhood disjointness written out directly from adjacency.
fn conservative_by_hand(g: &Graph, a: Edge, b: Edge) -> bool {
    let closed = |x| {
        let mut s: Vec<_> = g.neighbors(x).unwrap().to_vec();
        s.push(x);
        s
    };
    let touches = |x, e: Edge| closed(x).iter().any(|w| e.has_endpoint(*w));
    !(touches(b.u(), a) || touches(b.v(), a) || touches(a.u(), b) || touches(a.v(), b))
}

#[test]
fn path_batch_rounds_match_hand_evaluation() {
    let g = Graph::from_edges((0..7).map(|i| (i, i + 1))).unwrap();
    let ix = MaximalCliqueIndex::bootstrap(&g);
    let batch = [edge(0, 2), edge(5, 7), edge(1, 3)];
    assert!(conservative_by_hand(&g, batch[0], batch[1]));
    assert!(!conservative_by_hand(&g, batch[0], batch[2]));
    let s = schedule_batch(&g, ix.store(), &batch, IndependenceMode::Conservative).unwrap();
    let rounds: Vec<Vec<Edge>> = s
        .rounds
        .iter()
        .map(|r| r.iter().map(|m| m.edge).collect())
        .collect();
    assert_eq!(rounds, vec![vec![edge(0, 2), edge(5, 7)], vec![edge(1, 3)]]);
}

fn random_batch(rng: &mut ChaCha8Rng, n: u32, p: f64, size: usize) -> (Graph, Vec<Edge>) {
    let mut all = random_edge_order(rng, n, 1.0);
    all.shuffle(rng);
    let (batch, rest) = all.split_at(size);
    let mut g = Graph::with_vertices(n);
    for &e in rest {
        if rand::Rng::gen_bool(rng, p) {
            g.add_edge(e);
        }
    }
    (g, batch.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn conservative_predicate_is_symmetric_and_matches_hand_version(
        (n, edges) in graph_with_order(10), seed in any::<u64>()
    ) {
        let g = build(n, &edges);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<Edge> = (0..n).flat_map(|a| (a + 1..n).map(move |b| edge(a, b))).collect();
        pairs.shuffle(&mut rng);
        for w in pairs.windows(2).take(20) {
            let a = ScheduledEdge { edge: w[0], side: w[0].u() };
            let b = ScheduledEdge { edge: w[1], side: w[1].v() };
            let ab = edges_independent(&g, a, b, IndependenceMode::Conservative);
            prop_assert_eq!(ab, edges_independent(&g, b, a, IndependenceMode::Conservative));
            prop_assert_eq!(ab, conservative_by_hand(&g, w[0], w[1]));
        }
    }

    #[test]
    fn conservative_batches_equal_sequential_insertion(seed in any::<u64>(), p in 0.1f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g0, batch) = random_batch(&mut rng, 12, p, 6);
        let ix0 = MaximalCliqueIndex::bootstrap(&g0);
        for method in [Method::Proposed, Method::Existing] {
            let s = schedule_batch(&g0, ix0.store(), &batch, IndependenceMode::Conservative).unwrap();
            prop_assert!(schedule_is_valid(&g0, &s));
            prop_assert_eq!(s.len(), batch.len());

            let (mut g, mut ix) = (g0.clone(), ix0.clone());
            apply_batch(&mut g, &mut ix, &s, method).unwrap();
            prop_assert_eq!(ix.check_consistency(&g), Ok(()));
            let expected = enumerate_maximal_cliques(&g);
            prop_assert_eq!(ix.sorted_cliques(), expected.clone());

            for _ in 0..5 {
                let (mut h, mut jx) = (g0.clone(), ix0.clone());
                for round in &s.rounds {
                    let mut order = round.clone();
                    order.shuffle(&mut rng);
                    for m in order {
                        insert_edge_update(&mut h, &mut jx, m.edge, method).unwrap();
                    }
                }
                prop_assert_eq!(jx.sorted_cliques(), expected.clone());
            }
        }
    }
}
