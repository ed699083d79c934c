use core::fmt;

use crate::graph::{Edge, VertexId};
use crate::index::{Clique, CliqueId};

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    SelfLoop(VertexId),
    UnknownVertex(VertexId),
    UnknownClique(CliqueId),
    DuplicateClique(Clique),
    EmptyClique,
    /// `k` must be at least 1.
    InvalidK(usize),
    /// `k_expand_oversized` only accepts candidates of exactly `k + 1` vertices.
    NotOversized {
        k: usize,
        len: usize,
    },
    /// An expansion was requested for a candidate that lacks an endpoint.
    EndpointMissing(VertexId),
    DuplicateEdge(Edge),
    /// Stream weights decrease at this position.
    UnsortedStream {
        position: usize,
    },
    /// A batch edge was already present in the graph.
    EdgePresent(Edge),
    DimensionMismatch {
        point: usize,
        expected: usize,
        found: usize,
    },
    ZeroDimension,
    NonFiniteCoordinate {
        point: usize,
    },
    TooFewPoints(usize),
    /// The side requested for one-sided generation is not an endpoint of the edge.
    SideNotEndpoint {
        side: VertexId,
        edge: Edge,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop(v) => write!(f, "self-loop on vertex {v}"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::UnknownClique(id) => write!(f, "unknown clique id {}", id.0),
            Error::DuplicateClique(c) => write!(f, "duplicate clique {c}"),
            Error::EmptyClique => f.write_str("clique has no members"),
            Error::InvalidK(k) => write!(f, "k must be at least 1, got {k}"),
            Error::NotOversized { k, len } => {
                write!(
                    f,
                    "expected a candidate of size {} for k = {k}, got {len}",
                    k + 1
                )
            }
            Error::EndpointMissing(v) => write!(f, "candidate does not contain endpoint {v}"),
            Error::DuplicateEdge(e) => write!(f, "edge {e} appears twice"),
            Error::UnsortedStream { position } => {
                write!(f, "stream weight decreases at entry {position}")
            }
            Error::EdgePresent(e) => write!(f, "edge {e} is already in the graph"),
            Error::DimensionMismatch {
                point,
                expected,
                found,
            } => write!(
                f,
                "point {point} has dimension {found}, expected {expected}"
            ),
            Error::ZeroDimension => f.write_str("points must have at least one coordinate"),
            Error::NonFiniteCoordinate { point } => {
                write!(f, "point {point} has a non-finite coordinate")
            }
            Error::TooFewPoints(n) => write!(f, "need at least 2 points, got {n}"),
            Error::SideNotEndpoint { side, edge } => {
                write!(f, "vertex {side} is not an endpoint of {edge}")
            }
        }
    }
}

impl core::error::Error for Error {}
