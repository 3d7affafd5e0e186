//! Exact graph invariant solvers.

pub mod clique;
pub mod coloring;
pub mod neighborhood;
pub mod paths;
pub mod report;

pub use clique::{clique_number, enumerate_k_cliques, is_clique, max_clique};
pub use coloring::{
    chromatic_index_exact, chromatic_index_search, sum_edge_coloring, verify_proper_edge_coloring,
    vizing_class, Certificate, ChromaticIndex, ChromaticIndexResult, EdgeColoring, VizingClass,
    DEFAULT_BUDGET,
};
pub use neighborhood::{neighborhood_disjointness_check, Clause, PairVerdict};
pub use paths::{
    bipartition, component_sizes, components, diameter, girth, is_bipartite, is_cycle, is_star, Bipartition,
    Extended, Girth,
};
pub use report::{analyze, compute_invariants, InvariantReport, ReportOptions};
