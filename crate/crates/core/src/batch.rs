//! Grouping pending insertions into rounds of mutually independent updates.
//!
//! Two insertions `e1 = u1v1` and `e2 = u2v2` are independent when neither can
//! change the clique lists the other reads. With pairwise generation both
//! endpoints' lists are read, so the condition is
//! `(N(u2) ∪ N(v2)) ∩ {u1, v1} = ∅`. One-sided generation reads only the list
//! of its generation side `s2`, which relaxes it to `N(s2) ∩ {u1, v1} = ∅`.
//!
//! A round is executed against a snapshot: all of its edges are added to the
//! graph, every update is planned read-only against the index as it was before
//! the round, and the plans are committed one after another. Planning can
//! therefore run in parallel.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Edge, Graph, VertexId};
use crate::index::CliqueStore;
use crate::insertion::{
    choose_side, no_clock, register_vertex, Clock, IncrementalIndex, InsertionPlan,
    InsertionReport, Method,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndependenceMode {
    /// Neither edge touches the closed neighborhood of either endpoint of the
    /// other. Sound for both generation methods.
    Conservative,
    /// Each edge avoids the closed neighborhood of the other's generation side.
    Aggressive,
    /// Only the later edge's generation side is checked against the earlier
    /// edge. Kept for experiments.
    AggressiveOneSided,
}

impl IndependenceMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            IndependenceMode::Conservative => "conservative",
            IndependenceMode::Aggressive => "aggressive",
            IndependenceMode::AggressiveOneSided => "aggressive-one-sided",
        }
    }

    fn uses_sides(&self) -> bool {
        !matches!(self, IndependenceMode::Conservative)
    }
}

/// Batch edge with the generation side fixed at scheduling time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduledEdge {
    pub edge: Edge,
    pub side: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub rounds: Vec<Vec<ScheduledEdge>>,
    pub mode: IndependenceMode,
}

impl Schedule {
    pub fn len(&self) -> usize {
        self.rounds.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }
}

/// Independence of `first` (earlier in batch order) and `second`, with
/// neighborhoods taken in `g`. Edges sharing an endpoint are never
/// independent. Sides only matter for the aggressive modes.
pub fn edges_independent(
    g: &Graph,
    first: ScheduledEdge,
    second: ScheduledEdge,
    mode: IndependenceMode,
) -> bool {
    let (e1, e2) = (first.edge, second.edge);
    if e1.endpoints().iter().any(|&w| e2.has_endpoint(w)) {
        return false;
    }
    let avoids = |center: VertexId, e: Edge| {
        e.endpoints()
            .iter()
            .all(|&w| !g.in_closed_neighborhood(center, w))
    };
    match mode {
        IndependenceMode::Conservative => {
            e2.endpoints().iter().all(|&c| avoids(c, e1))
                && e1.endpoints().iter().all(|&c| avoids(c, e2))
        }
        IndependenceMode::Aggressive => avoids(second.side, e1) && avoids(first.side, e2),
        IndependenceMode::AggressiveOneSided => avoids(second.side, e1),
    }
}

fn round_is_valid(g: &Graph, round: &[ScheduledEdge], mode: IndependenceMode) -> bool {
    round.iter().enumerate().all(|(i, &a)| {
        round[i + 1..]
            .iter()
            .all(|&b| edges_independent(g, a, b, mode))
    })
}

/// Greedy first-fit: each edge, in batch order, goes to the earliest round
/// whose members it is independent of (neighborhoods taken in `g` plus the
/// edges of all earlier rounds), provided the placement keeps every later
/// round valid. Generation sides are chosen from `store` before the batch.
pub fn schedule_batch(
    g: &Graph,
    store: &CliqueStore,
    batch: &[Edge],
    mode: IndependenceMode,
) -> Result<Schedule> {
    let mut seen = BTreeSet::new();
    for &e in batch {
        if !seen.insert(e) {
            return Err(Error::DuplicateEdge(e));
        }
        if g.contains_edge(e) {
            return Err(Error::EdgePresent(e));
        }
    }

    let mut rounds: Vec<Vec<ScheduledEdge>> = Vec::new();
    // prefix[r] = g plus the edges of rounds 0..r
    let mut prefix: Vec<Graph> = alloc::vec![g.clone()];
    for &edge in batch {
        let item = ScheduledEdge {
            edge,
            side: choose_side(store, edge.u(), edge.v()),
        };
        let placed = (0..rounds.len()).find(|&r| {
            rounds[r]
                .iter()
                .all(|&m| edges_independent(&prefix[r], m, item, mode))
                && (r + 1..rounds.len()).all(|later| {
                    let mut h = prefix[later].clone();
                    h.add_edge(edge);
                    round_is_valid(&h, &rounds[later], mode)
                })
        });
        let r = placed.unwrap_or_else(|| {
            rounds.push(Vec::new());
            rounds.len() - 1
        });
        rounds[r].push(item);
        // the edge now belongs to every prefix after round r
        for h in prefix.iter_mut().skip(r + 1) {
            h.add_edge(edge);
        }
        if prefix.len() == rounds.len() {
            let mut next = prefix.last().expect("non-empty").clone();
            next.add_edge(edge);
            prefix.push(next);
        }
    }
    Ok(Schedule { rounds, mode })
}

/// `true` iff every within-round pair satisfies the schedule's predicate
/// against `g` plus the earlier rounds.
pub fn schedule_is_valid(g: &Graph, s: &Schedule) -> bool {
    let mut h = g.clone();
    for round in &s.rounds {
        if !round_is_valid(&h, round, s.mode) {
            return false;
        }
        for m in round {
            h.add_edge(m.edge);
        }
    }
    true
}

/// Registers every endpoint of the schedule and adds the edges of round
/// `round` to `g`.
pub fn begin_round<I: IncrementalIndex + ?Sized>(
    g: &mut Graph,
    ix: &mut I,
    round: &[ScheduledEdge],
) {
    for m in round {
        for w in m.edge.endpoints() {
            register_vertex(g, ix, w);
        }
    }
    for m in round {
        g.add_edge(m.edge);
    }
}

/// Plans one update of a round against the pre-round index. The side fixed
/// by the schedule is used in the aggressive modes.
pub fn plan_scheduled<I: IncrementalIndex + ?Sized>(
    g: &Graph,
    ix: &I,
    item: ScheduledEdge,
    mode: IndependenceMode,
    method: Method,
    clock: Clock,
) -> Result<(InsertionPlan, u64)> {
    let start = clock();
    let side = mode.uses_sides().then_some(item.side);
    let plan = ix.plan(g, item.edge, method, side)?;
    Ok((plan, clock().saturating_sub(start)))
}

/// Commits the plans of one round in order.
pub fn commit_round<I: IncrementalIndex + ?Sized>(
    ix: &mut I,
    plans: Vec<(InsertionPlan, u64)>,
    round: usize,
) -> Result<Vec<InsertionReport>> {
    let mut out = Vec::with_capacity(plans.len());
    for (plan, elapsed) in plans {
        ix.commit(&plan)?;
        let mut report = InsertionReport::from_plan(plan, ix.k(), ix.store().len());
        report.elapsed_ns = elapsed;
        report.round = Some(round);
        out.push(report);
    }
    Ok(out)
}

/// Executes a schedule round by round. Rounds are sequential; within a round
/// the updates are planned against the same snapshot and committed in order,
/// which is what a concurrent execution of the round would compute.
pub fn apply_batch<I: IncrementalIndex + ?Sized>(
    g: &mut Graph,
    ix: &mut I,
    s: &Schedule,
    method: Method,
) -> Result<Vec<InsertionReport>> {
    apply_batch_with(g, ix, s, method, no_clock)
}

pub fn apply_batch_with<I: IncrementalIndex + ?Sized>(
    g: &mut Graph,
    ix: &mut I,
    s: &Schedule,
    method: Method,
    clock: Clock,
) -> Result<Vec<InsertionReport>> {
    let mut reports = Vec::with_capacity(s.len());
    for (r, round) in s.rounds.iter().enumerate() {
        begin_round(g, ix, round);
        let plans = round
            .iter()
            .map(|&item| plan_scheduled(g, ix, item, s.mode, method, clock))
            .collect::<Result<Vec<_>>>()?;
        reports.extend(commit_round(ix, plans, r)?);
    }
    Ok(reports)
}
