//! Incremental maximal clique enumeration for graphs that only grow.
//!
//! The crate keeps the full list of maximal cliques (or maximal k-cliques) of an
//! undirected graph up to date while edges are inserted one at a time. After
//! inserting `uv`, candidate cliques are generated from the cliques that contain
//! one endpoint only, `(C_u ∩ N(v)) ∪ {u, v}`, which is linear in the number of
//! cliques through that endpoint. The older pairwise generator
//! `(C_u ∩ C_v) ∪ {u, v}` is kept for comparison, and [`oracle`] provides
//! from-scratch enumerators used for bootstrap and verification.
//!
//! Neighborhoods are closed throughout: `N(u)` contains `u` itself.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod batch;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod index;
pub mod insertion;
pub mod kclique;
pub mod oracle;
pub mod tracker;

pub use batch::{
    apply_batch, apply_batch_with, edges_independent, schedule_batch, schedule_is_valid,
    IndependenceMode, Schedule, ScheduledEdge,
};
pub use error::Error;
pub use filtration::{
    build_edge_stream, run_filtration, run_filtration_with, EdgeStream, PointCloud, StreamEntry,
};
pub use graph::{Edge, EdgeInsertion, Graph, VertexId};
pub use index::{
    canonical_key, canonical_text, Clique, CliqueId, CliqueKey, CliqueStore, MaximalCliqueIndex,
    Violation,
};
pub use insertion::{
    choose_side, generate_candidates_existing, generate_candidates_proposed, insert_edge,
    insert_edge_update, is_maximal_in, no_clock, register_vertex, remove_stale, Clock,
    IncrementalIndex, InsertionPlan, InsertionReport, Method,
};
pub use kclique::{k_expand_oversized, k_generate_candidates, k_insert_edge_update, KCliqueIndex};
pub use oracle::{enumerate_maximal_cliques, enumerate_maximal_k_cliques};
pub use tracker::Tracker;

pub type Result<T, E = Error> = core::result::Result<T, E>;
