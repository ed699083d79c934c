//! File formats, parallel round execution and the command-line driver for
//! [`dynmce_core`].

pub mod cli;
pub mod clock;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod report;

use dynmce_core::{
    insert_edge, no_clock, schedule_batch, Clock, EdgeStream, Graph, IndependenceMode, Method,
    PointCloud, Tracker,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use error::CliError;
use report::{BenchRow, StatsRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamOptions {
    pub method: Method,
    pub k: Option<usize>,
    /// Equal-weight runs are scheduled into independent rounds when set.
    pub parallel: Option<IndependenceMode>,
    pub timing: bool,
}

impl Default for StreamOptions {
    fn default() -> Self {
        StreamOptions {
            method: Method::Proposed,
            k: None,
            parallel: None,
            timing: true,
        }
    }
}

pub struct StreamOutcome {
    pub rows: Vec<StatsRow>,
    pub graph: Graph,
    pub tracker: Tracker,
}

fn clock_for(timing: bool) -> Clock {
    if timing {
        clock::monotonic_ns
    } else {
        no_clock
    }
}

/// Inserts a whole stream from the edgeless graph on its vertices.
pub fn run_stream(stream: &EdgeStream, opts: StreamOptions) -> Result<StreamOutcome, CliError> {
    let clock = clock_for(opts.timing);
    let mut g = stream.initial_graph();
    let mut tracker = Tracker::bootstrap(&g, opts.k)?;
    let mut rows = Vec::with_capacity(stream.len());
    match opts.parallel {
        None => {
            for entry in stream.entries() {
                let r = insert_edge(&mut g, &mut tracker, entry.edge, opts.method, None, clock)?;
                rows.push(StatsRow::new(rows.len() + 1, &r, Some(entry.weight)));
            }
        }
        Some(mode) => {
            for run in stream.equal_weight_runs() {
                let batch: Vec<_> = run.iter().map(|e| e.edge).collect();
                let schedule = schedule_batch(&g, tracker.store(), &batch, mode)?;
                let reports = parallel::apply_batch_parallel(
                    &mut g,
                    &mut tracker,
                    &schedule,
                    opts.method,
                    clock,
                )?;
                for r in &reports {
                    rows.push(StatsRow::new(rows.len() + 1, r, Some(run[0].weight)));
                }
            }
        }
    }
    Ok(StreamOutcome {
        rows,
        graph: g,
        tracker,
    })
}

/// Runs both generation methods over the same stream and records, per step,
/// candidate counts and timings side by side. Fails with a mismatch if the
/// two ever disagree on the update.
pub fn run_bench(
    stream: &EdgeStream,
    k: Option<usize>,
    timing: bool,
) -> Result<(Vec<BenchRow>, Tracker), CliError> {
    let clock = clock_for(timing);
    let mut g_prop = stream.initial_graph();
    let mut g_exist = g_prop.clone();
    let mut prop = Tracker::bootstrap(&g_prop, k)?;
    let mut exist = prop.clone();
    let mut rows = Vec::with_capacity(stream.len());
    for (i, entry) in stream.entries().iter().enumerate() {
        let e = entry.edge;
        let (cu, cv) = (
            prop.store().count_containing(e.u()),
            prop.store().count_containing(e.v()),
        );
        let a = insert_edge(&mut g_prop, &mut prop, e, Method::Proposed, None, clock)?;
        let b = insert_edge(&mut g_exist, &mut exist, e, Method::Existing, None, clock)?;
        if a.added != b.added || a.removed != b.removed {
            return Err(CliError::Mismatch(format!(
                "methods disagree at step {} inserting {e}",
                i + 1
            )));
        }
        rows.push(BenchRow {
            step: i + 1,
            u: e.u().0,
            v: e.v().0,
            weight: entry.weight,
            side: a.side.map_or(e.u().0, |s| s.0),
            cliques_u: cu,
            cliques_v: cv,
            proposed_candidates: a.candidates_generated,
            existing_candidates: b.candidates_generated,
            proposed_after_dedup: a.candidates_after_dedup,
            existing_after_dedup: b.candidates_after_dedup,
            proposed_ns: a.elapsed_ns,
            existing_ns: b.elapsed_ns,
            num_added: a.added.len(),
            num_removed: a.removed.len(),
            total_cliques: a.total_cliques,
        });
    }
    Ok((rows, prop))
}

/// `n` points uniform in the unit cube of dimension `dim`.
pub fn random_point_cloud(n: usize, dim: usize, seed: u64) -> Result<PointCloud, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| (0..dim).map(|_| rng.gen::<f64>()).collect())
        .collect();
    Ok(PointCloud::new(points)?)
}

/// Diff of two canonical enumeration texts, as `-`/`+` lines.
pub fn enumeration_diff(expected: &str, actual: &str) -> Vec<String> {
    use std::collections::BTreeSet;
    let exp: BTreeSet<&str> = expected.lines().collect();
    let act: BTreeSet<&str> = actual.lines().collect();
    exp.difference(&act)
        .map(|l| format!("- {l}"))
        .chain(act.difference(&exp).map(|l| format!("+ {l}")))
        .collect()
}
