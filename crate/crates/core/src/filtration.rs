//! Distance filtration of a point cloud: all point pairs inserted in order of
//! increasing Euclidean distance, the clique enumeration updated after each.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Edge, Graph, VertexId};
use crate::insertion::{insert_edge, no_clock, Clock, InsertionReport, Method};
use crate::tracker::Tracker;
use crate::Result;

/// Points of equal dimension `d >= 1`. Point `i` becomes vertex `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::TooFewPoints(0));
        };
        let dim = first.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    point: i,
                    expected: dim,
                    found: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteCoordinate { point: i });
            }
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.points[0].len()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        let sq: f64 = self.points[a]
            .iter()
            .zip(&self.points[b])
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        libm::sqrt(sq)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamEntry {
    pub edge: Edge,
    pub weight: f64,
}

/// Insertion order for a filtration: non-decreasing weights, distinct edges.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct EdgeStream {
    entries: Vec<StreamEntry>,
    vertices: BTreeSet<VertexId>,
}

impl EdgeStream {
    /// Validates ordering and distinctness. `vertices` adds endpoints that
    /// should exist even if no entry mentions them.
    pub fn new(
        entries: Vec<StreamEntry>,
        vertices: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut all: BTreeSet<VertexId> = vertices.into_iter().collect();
        for (i, e) in entries.iter().enumerate() {
            if !seen.insert(e.edge) {
                return Err(Error::DuplicateEdge(e.edge));
            }
            if i > 0 && entries[i - 1].weight > e.weight {
                return Err(Error::UnsortedStream { position: i });
            }
            all.extend(e.edge.endpoints());
        }
        Ok(EdgeStream {
            entries,
            vertices: all,
        })
    }

    pub fn entries(&self) -> &[StreamEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    /// Edgeless graph on the stream's vertices.
    pub fn initial_graph(&self) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(v);
        }
        g
    }

    /// Consecutive runs of entries with equal weight.
    pub fn equal_weight_runs(&self) -> impl Iterator<Item = &[StreamEntry]> + '_ {
        self.entries.chunk_by(|a, b| a.weight == b.weight)
    }
}

/// All `n(n-1)/2` pairs weighted by Euclidean distance, ascending, ties broken
/// by canonical edge order.
pub fn build_edge_stream(pc: &PointCloud) -> Result<EdgeStream> {
    let n = pc.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut entries = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            entries.push(StreamEntry {
                edge: Edge::new(a as u32, b as u32)?,
                weight: pc.distance(a, b),
            });
        }
    }
    entries.sort_by(|x, y| x.weight.total_cmp(&y.weight).then(x.edge.cmp(&y.edge)));
    EdgeStream::new(entries, (0..n as u32).map(VertexId))
}

/// Inserts the stream in order from the edgeless graph on its vertices, one
/// report per step. `k = Some(_)` maintains maximal k-cliques instead.
pub fn run_filtration(
    stream: &EdgeStream,
    method: Method,
    k: Option<usize>,
) -> Result<Vec<InsertionReport>> {
    run_filtration_with(stream, method, k, no_clock, |_, _, _, _| {})
}

/// Like [`run_filtration`], calling `inspect(step, graph, tracker, report)`
/// after every insertion.
pub fn run_filtration_with<F>(
    stream: &EdgeStream,
    method: Method,
    k: Option<usize>,
    clock: Clock,
    mut inspect: F,
) -> Result<Vec<InsertionReport>>
where
    F: FnMut(usize, &Graph, &Tracker, &InsertionReport),
{
    let mut g = stream.initial_graph();
    let mut tracker = Tracker::bootstrap(&g, k)?;
    let mut reports = Vec::with_capacity(stream.len());
    for (step, entry) in stream.entries().iter().enumerate() {
        let report = insert_edge(&mut g, &mut tracker, entry.edge, method, None, clock)?;
        inspect(step, &g, &tracker, &report);
        reports.push(report);
    }
    Ok(reports)
}
