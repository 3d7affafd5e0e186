//! Integer helpers and monic polynomials over Z_p used to realize GF(p^k).

use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^k` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// A monic polynomial over Z_p. `coeffs[i]` is the coefficient of x^i for
/// `i < degree`; the leading 1 is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMod {
    p: u32,
    coeffs: Vec<u32>,
}

impl PolyMod {
    pub fn new(p: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidSpec(format!("{p} is not prime")));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("polynomial degree must be at least 1".into()));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidSpec(format!("coefficient {c} not reduced mod {p}")));
        }
        Ok(Self { p, coeffs })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Low-order coefficients, constant term first.
    pub fn lower_coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Full coefficient vector including the leading 1.
    pub fn coeffs(&self) -> Vec<u32> {
        let mut all = self.coeffs.clone();
        all.push(1);
        all
    }

    /// Reduces a coefficient vector (constant first, any length) modulo `self`.
    pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        let k = self.degree();
        let p = self.p;
        while v.len() > k {
            let lead = v.pop().unwrap();
            if lead == 0 {
                continue;
            }
            // x^k = -sum c_i x^i
            let base = v.len() - k;
            for (i, &c) in self.coeffs.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                v[base + i] = (v[base + i] + p - sub) % p;
            }
        }
        v.resize(k, 0);
        v
    }

    /// Product of two residues (each of length `degree`) modulo `self`.
    pub fn mul_residues(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
            }
        }
        self.reduce(out.into_iter().map(|c| c as u32).collect())
    }

    /// True if no monic polynomial of degree `1..=degree/2` divides `self`.
    pub fn is_irreducible(&self) -> bool {
        let k = self.degree();
        (1..=k / 2).all(|d| MonicIter::new(self.p, d).all(|g| !divides(self.p, &g, &self.coeffs())))
    }
}

impl fmt::Display for PolyMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all = self.coeffs();
        let mut terms = Vec::new();
        for (i, &c) in all.iter().enumerate().rev() {
            if c != 0 {
                terms.push(monomial(c, i, "x"));
            }
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// Renders `c·sym^i` the way residue names are printed ("2a", "a^2", "3").
pub(crate) fn monomial(c: u32, i: usize, sym: &str) -> String {
    match (c, i) {
        (c, 0) => c.to_string(),
        (1, 1) => sym.to_string(),
        (c, 1) => format!("{c}{sym}"),
        (1, i) => format!("{sym}^{i}"),
        (c, i) => format!("{c}{sym}^{i}"),
    }
}

/// Enumerates monic polynomials of a fixed degree as full coefficient vectors
/// (constant first), in lexicographic order with the constant term most
/// significant.
struct MonicIter {
    p: u32,
    next: Option<Vec<u32>>,
}

impl MonicIter {
    fn new(p: u32, degree: usize) -> Self {
        Self { p, next: Some(vec![0; degree]) }
    }
}

impl Iterator for MonicIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // the constant term is the most significant digit, so carry runs
        // from the highest low-order coefficient down to the constant
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.p {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        let mut full = cur;
        full.push(1);
        Some(full)
    }
}

/// Whether monic `g` divides monic `f` over Z_p (both full, constant first).
fn divides(p: u32, g: &[u32], f: &[u32]) -> bool {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Lexicographically least monic irreducible polynomial of degree `k` over
/// Z_p, comparing low-order coefficients from the constant term upward.
pub fn find_least_irreducible(p: u32, k: usize) -> Result<PolyMod> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if k < 2 {
        return Err(Error::InvalidSpec(format!("irreducible search needs degree at least 2, got {k}")));
    }
    MonicIter::new(p, k)
        .map(|mut full| {
            full.pop();
            PolyMod { p, coeffs: full }
        })
        .find(PolyMod::is_irreducible)
        .ok_or_else(|| Error::InvalidSpec(format!("no irreducible of degree {k} over Z_{p}")))
}
