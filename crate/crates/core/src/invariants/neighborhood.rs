//! Neighborhood-disjointness clauses for G_WN(Z_2p), p ≥ 5 prime.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poly::is_prime;
use crate::ring::{FiniteRing, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// N(a) ∩ N(-a) = ∅.
    Negation,
    /// N(a) ∩ N(b) = ∅ when a + b = 1.
    SumOne,
    /// N(a) ∩ N(b) = ∅ when a + b = -1.
    SumMinusOne,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Negation => "i",
            Clause::SumOne => "ii",
            Clause::SumMinusOne => "iii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub clause: Clause,
    pub a: usize,
    pub b: usize,
    pub disjoint: bool,
}

/// The prime `p` when `ring` is Z_2p with p ≥ 5 prime.
pub fn z2p_prime(ring: &FiniteRing) -> Option<u64> {
    match *ring.spec() {
        RingSpec::Zn(n) if n % 2 == 0 && n / 2 >= 5 && is_prime(n / 2) => Some(n / 2),
        _ => None,
    }
}

/// Elements each clause leaves out, for Z_2p.
pub fn exclusions(p: usize, clause: Clause) -> Vec<usize> {
    let n = 2 * p;
    let neg = |x: usize| (n - x) % n;
    let half = |num: usize| num / 2;
    let mut out = match clause {
        Clause::Negation => vec![0, 1, p, p + 1, half(p + 1), half(p - 1)],
        Clause::SumOne => vec![
            0,
            1,
            p,
            p + 1,
            half(p - 1),
            half(p + 1),
            half(p + 3),
            half(3 * p - 1),
            half(3 * p + 1),
            half(3 * p + 3),
        ],
        Clause::SumMinusOne => vec![
            0,
            neg(1),
            p,
            p - 1,
            half(p - 1),
            half(p + 1),
            half(3 * p - 3),
            half(p - 3),
            half(3 * p - 1),
            half(3 * p + 1),
        ],
    };
    out.iter_mut().for_each(|x| *x %= n);
    out.sort_unstable();
    out.dedup();
    out
}

/// Checks every clause over every admissible `a`, one verdict per pair.
pub fn neighborhood_disjointness_check(ring: &FiniteRing, g: &SimpleGraph) -> Result<Vec<PairVerdict>> {
    let p = z2p_prime(ring)
        .ok_or_else(|| Error::Mismatch(format!("{} is not Z_2p with p ≥ 5 prime", ring.spec())))?
        as usize;
    if g.vertex_count() != ring.size() {
        return Err(Error::Mismatch("graph and ring sizes differ".into()));
    }
    let n = 2 * p;
    let disjoint = |a: usize, b: usize| g.row(a).is_disjoint(g.row(b));
    let mut out = Vec::new();
    for clause in [Clause::Negation, Clause::SumOne, Clause::SumMinusOne] {
        let excluded = exclusions(p, clause);
        for a in (0..n).filter(|a| !excluded.contains(a)) {
            let b = match clause {
                Clause::Negation => (n - a) % n,
                Clause::SumOne => (n + 1 - a) % n,
                Clause::SumMinusOne => (2 * n - 1 - a) % n,
            };
            if clause == Clause::Negation && excluded.contains(&b) {
                continue;
            }
            out.push(PairVerdict { clause, a, b, disjoint: disjoint(a, b) });
        }
    }
    Ok(out)
}
