//! Every invariant of one graph, computed in a single pass.

use serde::Serialize;

use super::clique::{enumerate_k_cliques, max_clique};
use super::coloring::{
    chromatic_index_search, sum_edge_coloring, verify_proper_edge_coloring, ChromaticIndex, VizingClass,
    DEFAULT_BUDGET,
};
use super::paths::{component_sizes, diameter, girth, is_bipartite, is_star, Extended};
use crate::classify::Classification;
use crate::error::{Error, Result};
use crate::graph::{GraphKind, WncGraph};
use crate::ring::FiniteRing;
use crate::theorems::TheoremVerdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Also list every 4-clique.
    pub four_cliques: bool,
    /// Node budget for the exact chromatic index search.
    pub budget: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { four_cliques: false, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_sizes: Vec<usize>,
    pub diameter: Extended,
    pub girth: Extended,
    /// A shortest cycle, empty when there is none.
    pub girth_cycle: Vec<usize>,
    pub is_bipartite: bool,
    pub is_star: bool,
    pub max_degree: usize,
    pub clique_number: usize,
    /// Lexicographically least maximum clique.
    pub max_clique: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub four_cliques: Option<Vec<Vec<usize>>>,
    pub sum_coloring_proper: bool,
    pub sum_coloring_colors: usize,
    pub chromatic_index: ChromaticIndex,
    pub vizing_class: VizingClass,
    pub search_nodes: u64,
    pub theorem_verdicts: Vec<TheoremVerdict>,
}

/// Checks that `c` and `g` were derived from `ring`.
pub(crate) fn check_inputs(ring: &FiniteRing, c: &Classification, g: &WncGraph) -> Result<()> {
    if c.size() != ring.size() || g.vertex_count() != ring.size() {
        return Err(Error::Mismatch(format!(
            "ring has {} elements, classification {}, graph {}",
            ring.size(),
            c.size(),
            g.vertex_count()
        )));
    }
    if g.ring_label() != ring.spec().to_string() {
        return Err(Error::Mismatch(format!("graph of {} given for {}", g.ring_label(), ring.spec())));
    }
    if g.kind() != GraphKind::WeaklyNilClean {
        return Err(Error::Mismatch("expected the weakly nil clean graph".into()));
    }
    Ok(())
}

/// Graph invariants only; `theorem_verdicts` is left empty.
pub fn compute_invariants(
    ring: &FiniteRing,
    c: &Classification,
    g: &WncGraph,
    opts: ReportOptions,
) -> Result<InvariantReport> {
    check_inputs(ring, c, g)?;
    let girth = girth(g);
    let (max_clique, clique_number) = max_clique(g);
    let sum = sum_edge_coloring(ring, g)?;
    let sum_proper = verify_proper_edge_coloring(g, &sum)?;
    let chi = chromatic_index_search(g, sum_proper.then_some(&sum), opts.budget);
    Ok(InvariantReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        component_sizes: component_sizes(g),
        diameter: diameter(g),
        girth: girth.length,
        girth_cycle: girth.cycle,
        is_bipartite: is_bipartite(g),
        is_star: is_star(g),
        max_degree: chi.max_degree,
        clique_number,
        max_clique,
        four_cliques: opts.four_cliques.then(|| enumerate_k_cliques(g, 4)),
        sum_coloring_proper: sum_proper,
        sum_coloring_colors: sum.color_count(),
        chromatic_index: chi.value,
        vizing_class: VizingClass::from_index(chi.value, chi.max_degree),
        search_nodes: chi.nodes,
        theorem_verdicts: Vec::new(),
    })
}

/// Invariants plus the full theorem suite.
pub fn analyze(
    ring: &FiniteRing,
    c: &Classification,
    g: &WncGraph,
    opts: ReportOptions,
) -> Result<InvariantReport> {
    let mut report = compute_invariants(ring, c, g, opts)?;
    report.theorem_verdicts = crate::theorems::suite_from_report(ring, c, g, &report)?;
    Ok(report)
}
