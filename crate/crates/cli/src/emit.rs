//! Graph exports: DOT, JSON and CSV.

use serde::{Deserialize, Serialize};
use wnc_core::{FiniteRing, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
}

pub fn emit(format: Format, ring: &FiniteRing, g: &SimpleGraph) -> String {
    match format {
        Format::Dot => to_dot(ring, g),
        Format::Json => to_json(ring, g),
        Format::Csv => to_csv(ring, g),
    }
}

fn quoted(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph: every vertex, then each edge once.
pub fn to_dot(ring: &FiniteRing, g: &SimpleGraph) -> String {
    let names = ring.names();
    let mut out = String::from("graph G {\n");
    for name in names {
        out.push_str(&format!("  {};\n", quoted(name)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", quoted(&names[u]), quoted(&names[v])));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn new(ring: &FiniteRing, g: &SimpleGraph) -> Self {
        Self { vertices: ring.names().to_vec(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }

    /// Rebuilds the graph from the edge list.
    pub fn to_graph(&self) -> wnc_core::Result<SimpleGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(self.vertices.len(), &edges)
    }
}

pub fn to_json(ring: &FiniteRing, g: &SimpleGraph) -> String {
    let mut s = serde_json::to_string(&GraphJson::new(ring, g)).expect("graph serializes");
    s.push('\n');
    s
}

/// One edge per row; commas inside element names become semicolons.
pub fn to_csv(ring: &FiniteRing, g: &SimpleGraph) -> String {
    let cell = |i: usize| ring.names()[i].replace(',', ";");
    let mut out = String::from("source,target\n");
    for (u, v) in g.edges() {
        out.push_str(&format!("{},{}\n", cell(u), cell(v)));
    }
    out
}
