//! External graph formats: DIMACS edge lists and a JSON edge-list schema.
//!
//! DIMACS: `c` comment lines, one `p edge N M` header, then `e U V` lines
//! with 1-based endpoints. A header/edge-count disagreement is a warning,
//! not an error; self-loops and out-of-range endpoints are fatal.
//!
//! JSON: `{"n": 3, "edges": [[0, 1], [1, 2]]}` with 0-based endpoints.

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Json,
}

impl FromStr for GraphFormat {
    type Err = LoadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dimacs" => Ok(GraphFormat::Dimacs),
            "json" => Ok(GraphFormat::Json),
            other => Err(LoadError::UnknownFormat(other.to_string())),
        }
    }
}

impl GraphFormat {
    /// `.json` files parse as JSON, anything else as DIMACS.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => GraphFormat::Json,
            _ => GraphFormat::Dimacs,
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("unknown graph format `{0}`; expected dimacs or json")]
    UnknownFormat(String),
    #[error("line {line}: malformed DIMACS content: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("missing `p edge N M` header")]
    MissingHeader,
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph plus non-fatal findings (count mismatches, isolated
/// vertices outside the standing assumption).
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<LoadedGraph, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        GraphFormat::Json => parse_json_graph(&text),
    }
}

pub fn parse_dimacs(text: &str) -> Result<LoadedGraph, LoadError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(LoadError::Malformed {
                        line: line_no,
                        reason: "duplicate `p` header".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(LoadError::Malformed {
                        line: line_no,
                        reason: format!("expected `p edge N M`, got `{line}`"),
                    });
                }
                let n = parse_field(fields[2], line_no)?;
                let m = parse_field(fields[3], line_no)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(LoadError::MissingHeader)?;
                if fields.len() != 3 {
                    return Err(LoadError::Malformed {
                        line: line_no,
                        reason: format!("expected `e U V`, got `{line}`"),
                    });
                }
                let u = parse_field(fields[1], line_no)?;
                let v = parse_field(fields[2], line_no)?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(LoadError::VertexOutOfRange {
                            line: line_no,
                            vertex,
                            n,
                        });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(LoadError::Malformed {
                    line: line_no,
                    reason: format!("unknown line type `{other}`"),
                })
            }
        }
    }

    let (n, declared_m) = header.ok_or(LoadError::MissingHeader)?;
    let mut warnings = Vec::new();
    if edges.len() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges but {} `e` lines were found",
            edges.len()
        ));
    }
    let graph = Graph::new(n, &edges)?;
    finish_load(graph, warnings)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_json_graph(text: &str) -> Result<LoadedGraph, LoadError> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| LoadError::Json(e.to_string()))?;
    let graph = Graph::new(parsed.n, &parsed.edges)?;
    finish_load(graph, Vec::new())
}

fn finish_load(graph: Graph, mut warnings: Vec<String>) -> Result<LoadedGraph, LoadError> {
    let isolated = graph.isolated_vertices();
    if !isolated.is_empty() {
        warnings.push(format!(
            "graph has {} isolated vertex(es) outside the standing assumption",
            isolated.len()
        ));
    }
    Ok(LoadedGraph { graph, warnings })
}

fn parse_field(s: &str, line: usize) -> Result<usize, LoadError> {
    s.parse().map_err(|_| LoadError::Malformed {
        line,
        reason: format!("`{s}` is not a non-negative integer"),
    })
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn to_json(g: &Graph) -> String {
    let value = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
    };
    serde_json::to_string_pretty(&value).expect("graph serialization cannot fail") + "\n"
}
