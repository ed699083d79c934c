//! Round execution with the planning step spread over the rayon pool.

use dynmce_core::batch::{begin_round, commit_round, plan_scheduled};
use dynmce_core::{Clock, Graph, IncrementalIndex, InsertionReport, Method, Schedule};
use rayon::prelude::*;

/// Same result as [`dynmce_core::apply_batch_with`]; the updates of a round
/// are planned concurrently against the shared pre-round snapshot.
pub fn apply_batch_parallel<I>(
    g: &mut Graph,
    ix: &mut I,
    s: &Schedule,
    method: Method,
    clock: Clock,
) -> dynmce_core::Result<Vec<InsertionReport>>
where
    I: IncrementalIndex + Sync + ?Sized,
{
    let mut reports = Vec::with_capacity(s.len());
    for (r, round) in s.rounds.iter().enumerate() {
        begin_round(g, ix, round);
        let (graph, index) = (&*g, &*ix);
        let plans = round
            .par_iter()
            .map(|&item| plan_scheduled(graph, index, item, s.mode, method, clock))
            .collect::<dynmce_core::Result<Vec<_>>>()?;
        reports.extend(commit_round(ix, plans, r)?);
    }
    Ok(reports)
}
