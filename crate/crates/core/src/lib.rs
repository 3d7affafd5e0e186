//! Finite rings, their weakly nil clean element classes, the weakly nil clean
//! graph G_WN(R), and exact solvers for its invariants.

pub mod classify;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod ring;
pub mod theorems;

pub use classify::{weakly_nil_clean_set, Classification, Decomposition, Sign, TypeSet};
pub use error::{Error, Result};
pub use graph::{build_nc_graph, build_wnc_graph, GraphKind, SimpleGraph, WncGraph};
pub use ring::{ElemId, FiniteRing, Projection, RingBuilder, RingSpec, DEFAULT_CAP};
pub use theorems::{theorem_suite, Status, TheoremVerdict, THEOREM_IDS};
