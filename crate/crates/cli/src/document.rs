//! The full per-ring report and its canonical JSON form.

use std::time::Instant;

use serde::Serialize;
use wnc_core::invariants::{analyze, InvariantReport, ReportOptions};
use wnc_core::{build_wnc_graph, weakly_nil_clean_set, FiniteRing, RingBuilder, RingSpec};

use crate::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct ClassSizes {
    pub idempotent: usize,
    pub nilpotent: usize,
    pub nil_clean: usize,
    pub weakly_nil_clean: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub ring: String,
    pub size: usize,
    pub idempotent_set: Vec<String>,
    pub nilpotent_set: Vec<String>,
    pub nil_clean_set: Vec<String>,
    pub wnc_set: Vec<String>,
    pub class_sizes: ClassSizes,
    pub is_weakly_nil_clean_ring: bool,
    pub is_nil_clean_ring: bool,
    pub max_clique_names: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub four_clique_names: Option<Vec<Vec<String>>>,
    #[serde(flatten)]
    pub invariants: InvariantReport,
    pub tool_version: &'static str,
    pub wall_time_ms: u64,
}

/// Fields that vary between identical runs.
pub const TIMING_FIELDS: [&str; 1] = ["wall_time_ms"];

impl ReportDocument {
    pub fn build(spec: &RingSpec, cap: usize, opts: ReportOptions) -> Result<Self, CliError> {
        let start = Instant::now();
        let ring = RingBuilder::new(cap).build(spec)?;
        Self::for_ring(&ring, opts, start)
    }

    fn for_ring(ring: &FiniteRing, opts: ReportOptions, start: Instant) -> Result<Self, CliError> {
        let c = weakly_nil_clean_set(ring);
        let g = build_wnc_graph(ring, &c);
        let invariants = analyze(ring, &c, &g, opts)?;
        let name = |v: &usize| ring.names()[*v].clone();
        Ok(ReportDocument {
            ring: ring.spec().to_string(),
            size: ring.size(),
            idempotent_set: ring.names_of(&c.idem),
            nilpotent_set: ring.names_of(&c.nil),
            nil_clean_set: ring.names_of(&c.nc),
            wnc_set: ring.names_of(&c.wnc),
            class_sizes: ClassSizes {
                idempotent: c.idem.count_ones(..),
                nilpotent: c.nil.count_ones(..),
                nil_clean: c.nc.count_ones(..),
                weakly_nil_clean: c.wnc_count(),
            },
            is_weakly_nil_clean_ring: c.is_weakly_nil_clean_ring(),
            is_nil_clean_ring: c.is_nil_clean_ring(),
            max_clique_names: invariants.max_clique.iter().map(name).collect(),
            four_clique_names: invariants
                .four_cliques
                .as_ref()
                .map(|sets| sets.iter().map(|s| s.iter().map(name).collect()).collect()),
            invariants,
            tool_version: TOOL_VERSION,
            wall_time_ms: start.elapsed().as_millis() as u64,
        })
    }

    /// Sorted-key JSON, newline-terminated.
    pub fn to_canonical_json(&self) -> String {
        canonical_json(self, &[])
    }

    /// Canonical JSON without the timing fields, for golden comparison.
    pub fn to_stable_json(&self) -> String {
        canonical_json(self, &TIMING_FIELDS)
    }

    pub fn to_text(&self) -> String {
        let inv = &self.invariants;
        let list = |v: &[String]| format!("{{{}}}", v.join(", "));
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22} {v}\n"));
        line("ring", self.ring.clone());
        line("size", self.size.to_string());
        line("idempotents", list(&self.idempotent_set));
        line("nilpotents", list(&self.nilpotent_set));
        line("nil clean", list(&self.nil_clean_set));
        line("weakly nil clean", list(&self.wnc_set));
        line("weakly nil clean ring", self.is_weakly_nil_clean_ring.to_string());
        line("nil clean ring", self.is_nil_clean_ring.to_string());
        line("edges", inv.edge_count.to_string());
        let sizes: Vec<String> = inv.component_sizes.iter().map(usize::to_string).collect();
        line("component sizes", format!("[{}]", sizes.join(", ")));
        line("diameter", inv.diameter.to_string());
        line("girth", inv.girth.to_string());
        line("bipartite", inv.is_bipartite.to_string());
        line("star", inv.is_star.to_string());
        line("max degree", inv.max_degree.to_string());
        line("clique number", inv.clique_number.to_string());
        line("max clique", list(&self.max_clique_names));
        if let Some(sets) = &self.four_clique_names {
            let shown: Vec<String> = sets.iter().map(|s| list(s)).collect();
            line("4-cliques", if shown.is_empty() { "none".into() } else { shown.join(" ") });
        }
        line("sum coloring colors", inv.sum_coloring_colors.to_string());
        line("chromatic index", inv.chromatic_index.to_string());
        line("vizing class", inv.vizing_class.to_string());
        out.push('\n');
        out.push_str(&crate::commands::verdict_table(&inv.theorem_verdicts, false));
        out
    }
}

fn canonical_json<T: Serialize>(value: &T, drop: &[&str]) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    if let Some(map) = v.as_object_mut() {
        for key in drop {
            map.remove(*key);
        }
    }
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}
