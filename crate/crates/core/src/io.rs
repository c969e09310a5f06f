//! On-disk formats.
//!
//! Graph JSON: `{"name", "n", "labels"?: [{"kind", "indices"}], "edges": [[u, v], ...]}`
//! with `u < v`. Coloring JSON: `{"graph_name", "n", "k", "colors": [...]}`,
//! colors indexed by vertex id. Writes go through a temporary file in the
//! target directory followed by a rename.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::coloring::PackingColoring;
use crate::error::IoError;
use crate::graph::Graph;
use crate::label::VertexLabel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub name: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<VertexLabel>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            name: g.name().to_string(),
            n: g.n(),
            labels: Some(g.labels().to_vec()),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        if let Some([u, v]) = self.edges.iter().find(|[u, v]| u >= v) {
            return Err(format!("edge [{u}, {v}] must be listed with u < v"));
        }
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::build(self.n, &edges, self.labels.clone())
            .map(|g| g.with_name(self.name.clone()))
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub graph_name: String,
    pub n: usize,
    pub k: u32,
    pub colors: Vec<u32>,
}

impl ColoringDoc {
    pub fn new(graph_name: &str, c: &PackingColoring) -> Self {
        ColoringDoc {
            graph_name: graph_name.to_string(),
            n: c.len(),
            k: c.k(),
            colors: c.colors().to_vec(),
        }
    }

    pub fn to_coloring(&self) -> Result<PackingColoring, String> {
        if self.colors.len() != self.n {
            return Err(format!("n is {} but {} colors are listed", self.n, self.colors.len()));
        }
        PackingColoring::new(self.colors.clone()).map_err(|e| e.to_string())
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<Graph, IoError> {
    let doc: GraphDoc = read_json(path)?;
    doc.to_graph().map_err(|msg| IoError::Schema {
        path: path.display().to_string(),
        msg,
    })
}

pub fn load_coloring(path: &Path) -> Result<PackingColoring, IoError> {
    let doc: ColoringDoc = read_json(path)?;
    doc.to_coloring().map_err(|msg| IoError::Schema {
        path: path.display().to_string(),
        msg,
    })
}

/// Writes `contents` to a temporary sibling of `path`, then renames it over.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), IoError> {
    let err = |source| IoError::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(contents).map_err(err)?;
    tmp.persist(path).map_err(|e| err(e.error))?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

pub fn save_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    write_json(path, &GraphDoc::from_graph(g))
}

pub fn save_coloring(path: &Path, graph_name: &str, c: &PackingColoring) -> Result<(), IoError> {
    write_json(path, &ColoringDoc::new(graph_name, c))
}

/// Undirected DOT; nodes are labeled by their rendered names, and by
/// `name = color` when a coloring is given.
pub fn to_dot(g: &Graph, coloring: Option<&PackingColoring>) -> String {
    let mut out = String::new();
    let title = if g.name().is_empty() { "G" } else { g.name() };
    writeln!(out, "graph {} {{", quote(title)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in g.vertices() {
        let name = g.label(v).to_string();
        let text = match coloring {
            Some(c) => format!("{name} = {}", c.color(v)),
            None => name,
        };
        writeln!(out, "  {v} [label={}];", quote(&text)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
