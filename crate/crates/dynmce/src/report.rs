//! CSV rows for per-insertion statistics and method comparisons.

use std::io::Write;

use dynmce_core::InsertionReport;
use serde::Serialize;

use crate::error::CliError;

/// One insertion. `k`, `weight` and `round` are empty when not applicable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsRow {
    pub step: usize,
    pub u: u32,
    pub v: u32,
    pub method: &'static str,
    pub side: Option<u32>,
    pub candidates_generated: usize,
    pub candidates_after_dedup: usize,
    pub num_added: usize,
    pub num_removed: usize,
    pub total_cliques: usize,
    pub elapsed_ns: u64,
    pub k: Option<usize>,
    pub weight: Option<f64>,
    pub round: Option<usize>,
}

impl StatsRow {
    pub fn new(step: usize, r: &InsertionReport, weight: Option<f64>) -> Self {
        StatsRow {
            step,
            u: r.edge.u().0,
            v: r.edge.v().0,
            method: r.method.as_str(),
            side: r.side.map(|s| s.0),
            candidates_generated: r.candidates_generated,
            candidates_after_dedup: r.candidates_after_dedup,
            num_added: r.added.len(),
            num_removed: r.removed.len(),
            total_cliques: r.total_cliques,
            elapsed_ns: r.elapsed_ns,
            k: r.k,
            weight,
            round: r.round,
        }
    }
}

/// Proposed and existing generation on the same insertion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub step: usize,
    pub u: u32,
    pub v: u32,
    pub weight: f64,
    pub side: u32,
    pub cliques_u: usize,
    pub cliques_v: usize,
    pub proposed_candidates: usize,
    pub existing_candidates: usize,
    pub proposed_after_dedup: usize,
    pub existing_after_dedup: usize,
    pub proposed_ns: u64,
    pub existing_ns: u64,
    pub num_added: usize,
    pub num_removed: usize,
    pub total_cliques: usize,
}

pub fn write_csv<W: Write, R: Serialize>(out: W, rows: &[R]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(|e| CliError::io("<csv>", e))?;
    Ok(())
}
