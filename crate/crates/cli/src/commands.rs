//! Subcommand implementations. Each returns the process exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use wnc_core::invariants::{compute_invariants, ReportOptions, DEFAULT_BUDGET};
use wnc_core::{
    build_wnc_graph, weakly_nil_clean_set, RingBuilder, RingSpec, Status, TheoremVerdict, DEFAULT_CAP,
    THEOREM_IDS,
};

use crate::document::ReportDocument;
use crate::emit::{emit, Format};
use crate::parse::parse_ring_expr;
use crate::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "wnc", version, about = "Weakly nil clean graphs of finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Ring expression, e.g. Z10, "GF(25)", M2(Z2), "Z3 x Z3", Z12/nil
    #[arg(value_name = "EXPR")]
    pub expr: String,
    /// Largest ring to realize
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Node budget for the exact chromatic index search
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify elements and compute every invariant and theorem check
    Report {
        #[command(flatten)]
        ring: RingArgs,
        /// Emit canonical JSON instead of text
        #[arg(long)]
        json: bool,
        /// List every 4-clique
        #[arg(long)]
        four_cliques: bool,
    },
    /// Write the weakly nil clean graph as DOT, JSON or CSV
    Export {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        format: Format,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare theorem predictions with computed values
    Verify {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated theorem ids; all when absent
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Do not fail on disagreements in charted edge cases
        #[arg(long)]
        allow_known_discrepancies: bool,
    },
    /// CSV census over Z_n for a range of n
    Batch {
        /// Inclusive range A..B
        #[arg(long, value_name = "A..B")]
        zn: String,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// Node budget for the exact chromatic index search
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Report { ring, json, four_cliques } => {
            let spec = parse_ring_expr(&ring.expr)?;
            let opts = ReportOptions { four_cliques, budget: ring.budget };
            let doc = ReportDocument::build(&spec, ring.cap, opts)?;
            let text = if json { doc.to_canonical_json() } else { doc.to_text() };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Export { ring, format, out: path } => {
            let spec = parse_ring_expr(&ring.expr)?;
            let r = RingBuilder::new(ring.cap).build(&spec)?;
            let g = build_wnc_graph(&r, &weakly_nil_clean_set(&r));
            write_output(path.as_deref(), &emit(format, &r, &g), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { ring, theorems, allow_known_discrepancies } => {
            if let Some(bad) = theorems.iter().find(|t| !THEOREM_IDS.contains(&t.as_str())) {
                return Err(CliError::Usage(format!(
                    "unknown theorem id '{bad}' (known: {})",
                    THEOREM_IDS.join(", ")
                )));
            }
            let spec = parse_ring_expr(&ring.expr)?;
            let opts = ReportOptions { four_cliques: false, budget: ring.budget };
            let doc = ReportDocument::build(&spec, ring.cap, opts)?;
            let rows: Vec<TheoremVerdict> = doc
                .invariants
                .theorem_verdicts
                .into_iter()
                .filter(|v| theorems.is_empty() || theorems.iter().any(|t| t == v.id))
                .collect();
            writeln!(out, "{}", doc.ring)?;
            out.write_all(verdict_table(&rows, allow_known_discrepancies).as_bytes())?;
            let failing = rows.iter().filter(|v| counts_as_failure(v, allow_known_discrepancies)).count();
            Ok(if failing > 0 { EXIT_DISAGREE } else { EXIT_OK })
        }
        Command::Batch { zn, out: path, budget } => {
            let (lo, hi) = parse_range(&zn)?;
            write_output(path.as_deref(), &batch_csv(lo, hi, budget)?, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn counts_as_failure(v: &TheoremVerdict, allow_known: bool) -> bool {
    v.status == Status::Disagree && !(allow_known && v.known_discrepancy)
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))
        }
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Aligned table of verdict rows.
pub fn verdict_table(rows: &[TheoremVerdict], allow_known: bool) -> String {
    let status = |v: &TheoremVerdict| match (v.status, v.known_discrepancy) {
        (Status::Disagree, true) if allow_known => "DISAGREE (known, allowed)".to_string(),
        (Status::Disagree, true) => "DISAGREE (known)".to_string(),
        (s, _) => s.label().to_string(),
    };
    let header = ["theorem", "predicted", "computed", "status", "note"].map(String::from);
    let mut table = vec![header];
    for v in rows {
        table.push([v.id.to_string(), v.predicted.clone(), v.computed.clone(), status(v), v.note.clone()]);
    }
    let widths: Vec<usize> =
        (0..4).map(|i| table.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &table {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i < 4 {
                line.push_str(&format!("{cell:<w$}  ", w = widths[i]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Parses `A..B` (inclusive) with 2 ≤ A ≤ B.
pub fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("invalid range '{text}': expected A..B with 2 <= A <= B"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = a.trim().parse().map_err(|_| bad())?;
    let hi: u64 = b.trim().parse().map_err(|_| bad())?;
    if lo < 2 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub const BATCH_HEADER: &str = "n,wnc_size,wnc_ring,girth,diameter,clique_number,class";

fn batch_row(n: u64, budget: u64) -> Result<String, CliError> {
    let spec = RingSpec::Zn(n);
    let r = RingBuilder::new(DEFAULT_CAP.max(n as usize)).build(&spec)?;
    let c = weakly_nil_clean_set(&r);
    let g = build_wnc_graph(&r, &c);
    let inv = compute_invariants(&r, &c, &g, ReportOptions { four_cliques: false, budget })?;
    Ok(format!(
        "{n},{},{},{},{},{},{}",
        c.wnc_count(),
        c.is_weakly_nil_clean_ring(),
        inv.girth,
        inv.diameter,
        inv.clique_number,
        inv.vizing_class
    ))
}

/// Rows are computed in parallel and emitted in order of `n`.
pub fn batch_csv(lo: u64, hi: u64, budget: u64) -> Result<String, CliError> {
    let rows: Vec<String> =
        (lo..=hi).into_par_iter().map(|n| batch_row(n, budget)).collect::<Result<_, _>>()?;
    let mut out = String::from(BATCH_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}
