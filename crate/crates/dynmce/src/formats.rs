//! Text formats: edge lists, point clouds and canonical clique enumerations.
//!
//! All three are line based and whitespace separated. Lines whose first
//! non-blank character is `#` are comments; blank lines are skipped.

use std::fmt::Write as _;

use dynmce_core::{
    canonical_text, Clique, Edge, EdgeStream, Graph, PointCloud, StreamEntry, VertexId,
};

use crate::error::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    })
}

fn parse_vertex(tok: &str, line: usize) -> Result<VertexId, CliError> {
    tok.parse::<u32>()
        .map(VertexId)
        .map_err(|_| CliError::parse(line, format!("invalid vertex id {tok:?}")))
}

/// One edge line: `u v` or `u v weight`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLine {
    pub edge: Edge,
    pub weight: Option<f64>,
}

pub fn parse_edge_list(text: &str) -> Result<Vec<EdgeLine>, CliError> {
    content_lines(text)
        .map(|(no, line)| {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !(2..=3).contains(&toks.len()) {
                return Err(CliError::parse(no, "expected \"u v\" or \"u v weight\""));
            }
            let u = parse_vertex(toks[0], no)?;
            let v = parse_vertex(toks[1], no)?;
            let edge = Edge::new(u, v).map_err(|e| CliError::parse(no, e.to_string()))?;
            let weight = match toks.get(2) {
                Some(w) => Some(
                    w.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| CliError::parse(no, format!("invalid weight {w:?}")))?,
                ),
                None => None,
            };
            Ok(EdgeLine { edge, weight })
        })
        .collect()
}

/// Graph from an edge list; repeated edges are ignored.
pub fn graph_from_edge_list(lines: &[EdgeLine]) -> Graph {
    let mut g = Graph::new();
    for l in lines {
        g.add_edge(l.edge);
    }
    g
}

/// Edge list in file order as an insertion stream. Lines without a weight get
/// their 1-based position as weight; given weights must be non-decreasing.
pub fn stream_from_edge_list(lines: &[EdgeLine]) -> Result<EdgeStream, CliError> {
    let entries = lines
        .iter()
        .enumerate()
        .map(|(i, l)| StreamEntry {
            edge: l.edge,
            weight: l.weight.unwrap_or((i + 1) as f64),
        })
        .collect();
    EdgeStream::new(entries, []).map_err(|e| CliError::parse(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_point_cloud(text: &str) -> Result<PointCloud, CliError> {
    let mut points = Vec::new();
    for (no, line) in content_lines(text) {
        let coords = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| CliError::parse(no, format!("invalid coordinate {t:?}")))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        points.push(coords);
    }
    PointCloud::new(points).map_err(|e| CliError::parse(0, e.to_string()))
}

pub fn write_point_cloud(pc: &PointCloud) -> String {
    let mut out = String::new();
    for p in pc.points() {
        let line: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Canonical enumeration text: one clique per line, ascending members, lines
/// sorted as integer sequences.
pub fn write_enumeration<'a, I: IntoIterator<Item = &'a Clique>>(cliques: I) -> String {
    canonical_text(cliques)
}

pub fn parse_enumeration(text: &str) -> Result<Vec<Clique>, CliError> {
    content_lines(text)
        .map(|(no, line)| {
            let members = line
                .split_whitespace()
                .map(|t| parse_vertex(t, no))
                .collect::<Result<Vec<_>, _>>()?;
            if members.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::parse(
                    no,
                    "clique members must be strictly ascending",
                ));
            }
            Clique::new(members).map_err(|e| CliError::parse(no, e.to_string()))
        })
        .collect()
}
