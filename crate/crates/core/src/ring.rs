//! Finite rings behind one carrier-plus-operations interface.
//!
//! Every ring is presented as the dense carrier `0..size`, each index an
//! [`ElemId`]. Arithmetic is structural (modular, polynomial, componentwise or
//! matrix) and is materialized into lookup tables for rings of at most
//! [`TABLE_LIMIT`] elements.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{find_least_irreducible, is_prime, monomial, prime_power, PolyMod};

/// Default bound on the carrier size of any constructed ring.
pub const DEFAULT_CAP: usize = 4096;

/// Rings up to this size get materialized add/mul/neg tables.
pub const TABLE_LIMIT: usize = 256;

/// Generator symbol used in the names of GF(p^k) elements.
pub const GF_SYMBOL: &str = "a";

/// Dense index of a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElemId(u32);

impl ElemId {
    pub const fn new(index: usize) -> Self {
        Self(index as u32)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Abstract description of a ring; realized by [`RingBuilder::build`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u64),
    Gf { p: u64, k: u32 },
    Product(Box<RingSpec>, Box<RingSpec>),
    Matrix(u32, Box<RingSpec>),
    NilQuotient(Box<RingSpec>),
}

impl RingSpec {
    pub fn product(left: RingSpec, right: RingSpec) -> Self {
        RingSpec::Product(Box::new(left), Box::new(right))
    }

    pub fn matrix(k: u32, inner: RingSpec) -> Self {
        RingSpec::Matrix(k, Box::new(inner))
    }

    pub fn nil_quotient(inner: RingSpec) -> Self {
        RingSpec::NilQuotient(Box::new(inner))
    }

    /// `GF(q)` from the field order, factoring `q` as a prime power.
    pub fn gf_order(q: u64) -> Result<Self> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::InvalidSpec(format!("GF({q}): {q} is not a prime power")))?;
        Ok(RingSpec::Gf { p, k })
    }

    /// Prime `p` when this names a prime field (`Zp` or `GF(p)`).
    pub fn prime_field(&self) -> Option<u64> {
        match *self {
            RingSpec::Zn(n) if is_prime(n) => Some(n),
            RingSpec::Gf { p, k: 1 } => Some(p),
            _ => None,
        }
    }

    /// `(p, k)` when this names a finite field of order p^k.
    pub fn finite_field(&self) -> Option<(u64, u32)> {
        match *self {
            RingSpec::Gf { p, k } => Some((p, k)),
            RingSpec::Zn(n) if is_prime(n) => Some((n, 1)),
            _ => None,
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Product(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::Gf { p, k } => write!(f, "GF({})", p.pow(*k)),
            RingSpec::Product(l, r) => {
                write!(f, "{l}x")?;
                r.fmt_term(f)
            }
            RingSpec::Matrix(k, inner) => write!(f, "M{k}({inner})"),
            RingSpec::NilQuotient(inner) => {
                inner.fmt_term(f)?;
                write!(f, "/nil")
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug, Clone)]
enum Arith {
    Zn { n: u32 },
    Gf { p: u32, k: usize, modulus: PolyMod },
    Product { left: Box<FiniteRing>, right: Box<FiniteRing> },
    Matrix { k: usize, base: Box<FiniteRing> },
    Quotient { base: Box<FiniteRing>, reps: Vec<ElemId>, proj: Vec<ElemId> },
}

/// A finite ring with identity on the carrier `0..size`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    spec: RingSpec,
    size: usize,
    zero: ElemId,
    one: ElemId,
    commutative: bool,
    names: Vec<String>,
    arith: Arith,
    tables: Option<Tables>,
}

impl FiniteRing {
    /// Builds `spec` under the default size cap.
    pub fn from_spec(spec: &RingSpec) -> Result<Self> {
        RingBuilder::default().build(spec)
    }

    fn finish(
        spec: RingSpec,
        size: usize,
        arith: Arith,
        zero: ElemId,
        one: ElemId,
        commutative: bool,
    ) -> Self {
        let mut ring =
            FiniteRing { spec, size, zero, one, commutative, names: Vec::new(), arith, tables: None };
        ring.names = (0..size).map(|i| ring.raw_name(ElemId::new(i))).collect();
        if size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in ring.elements() {
                for b in ring.elements() {
                    add.push(ring.raw_add(a, b).0);
                    mul.push(ring.raw_mul(a, b).0);
                }
            }
            let neg = ring.elements().map(|a| ring.raw_neg(a).0).collect();
            ring.tables = Some(Tables { add, mul, neg });
        }
        ring
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> ElemId {
        self.zero
    }

    pub fn one(&self) -> ElemId {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// True when `1 = -1`.
    pub fn has_characteristic_two(&self) -> bool {
        self.neg(self.one) == self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + Clone {
        (0..self.size).map(ElemId::new)
    }

    pub fn name(&self, a: ElemId) -> &str {
        &self.names[a.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId::new)
    }

    /// Names of the members of `set`, in element order.
    pub fn names_of(&self, set: &FixedBitSet) -> Vec<String> {
        set.ones().map(|i| self.names[i].clone()).collect()
    }

    #[inline]
    pub fn add(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.tables {
            Some(t) => ElemId(t.add[a.index() * self.size + b.index()]),
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.tables {
            Some(t) => ElemId(t.mul[a.index() * self.size + b.index()]),
            None => self.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: ElemId) -> ElemId {
        match &self.tables {
            Some(t) => ElemId(t.neg[a.index()]),
            None => self.raw_neg(a),
        }
    }

    pub fn sub(&self, a: ElemId, b: ElemId) -> ElemId {
        self.add(a, self.neg(b))
    }

    /// Whether `x^m = 0` for some `1 <= m <= size`; stops early when the
    /// power sequence revisits a value.
    pub fn is_nilpotent(&self, x: ElemId) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.size);
        let mut y = x;
        for _ in 0..self.size {
            if y == self.zero {
                return true;
            }
            if seen.put(y.index()) {
                return false;
            }
            y = self.mul(y, x);
        }
        y == self.zero
    }

    pub fn nilpotent_set(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.size);
        for x in self.elements().filter(|&x| self.is_nilpotent(x)) {
            set.insert(x.index());
        }
        set
    }

    fn raw_add(&self, a: ElemId, b: ElemId) -> ElemId {
        let (a, b) = (a.0, b.0);
        match &self.arith {
            Arith::Zn { n } => ElemId((a + b) % n),
            Arith::Gf { p, k, .. } => {
                let (x, y) = (gf_digits(a, *p, *k), gf_digits(b, *p, *k));
                let sum: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                ElemId(gf_index(&sum, *p))
            }
            Arith::Product { left, right } => {
                let (a1, a2) = split_pair(a, right.size);
                let (b1, b2) = split_pair(b, right.size);
                pair(left.add(a1, b1), right.add(a2, b2), right.size)
            }
            Arith::Matrix { k, base } => {
                let (x, y) = (matrix_entries(a, *k, base.size), matrix_entries(b, *k, base.size));
                let sum: Vec<ElemId> = x.iter().zip(&y).map(|(&u, &v)| base.add(u, v)).collect();
                matrix_index(&sum, base.size)
            }
            Arith::Quotient { base, reps, proj } => {
                proj[base.add(reps[a as usize], reps[b as usize]).index()]
            }
        }
    }

    fn raw_mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let (a, b) = (a.0, b.0);
        match &self.arith {
            Arith::Zn { n } => ElemId(((a as u64 * b as u64) % *n as u64) as u32),
            Arith::Gf { p, k, modulus } => {
                let prod = modulus.mul_residues(&gf_digits(a, *p, *k), &gf_digits(b, *p, *k));
                ElemId(gf_index(&prod, *p))
            }
            Arith::Product { left, right } => {
                let (a1, a2) = split_pair(a, right.size);
                let (b1, b2) = split_pair(b, right.size);
                pair(left.mul(a1, b1), right.mul(a2, b2), right.size)
            }
            Arith::Matrix { k, base } => {
                let k = *k;
                let (x, y) = (matrix_entries(a, k, base.size), matrix_entries(b, k, base.size));
                let mut out = vec![base.zero; k * k];
                for i in 0..k {
                    for j in 0..k {
                        out[i * k + j] = (0..k)
                            .fold(base.zero, |acc, l| base.add(acc, base.mul(x[i * k + l], y[l * k + j])));
                    }
                }
                matrix_index(&out, base.size)
            }
            Arith::Quotient { base, reps, proj } => {
                proj[base.mul(reps[a as usize], reps[b as usize]).index()]
            }
        }
    }

    fn raw_neg(&self, a: ElemId) -> ElemId {
        let a = a.0;
        match &self.arith {
            Arith::Zn { n } => ElemId((n - a) % n),
            Arith::Gf { p, k, .. } => {
                let neg: Vec<u32> = gf_digits(a, *p, *k).iter().map(|&c| (p - c) % p).collect();
                ElemId(gf_index(&neg, *p))
            }
            Arith::Product { left, right } => {
                let (a1, a2) = split_pair(a, right.size);
                pair(left.neg(a1), right.neg(a2), right.size)
            }
            Arith::Matrix { k, base } => {
                let neg: Vec<ElemId> =
                    matrix_entries(a, *k, base.size).iter().map(|&u| base.neg(u)).collect();
                matrix_index(&neg, base.size)
            }
            Arith::Quotient { base, reps, proj } => proj[base.neg(reps[a as usize]).index()],
        }
    }

    fn raw_name(&self, a: ElemId) -> String {
        match &self.arith {
            Arith::Zn { .. } => a.0.to_string(),
            Arith::Gf { p, k, .. } => {
                let digits = gf_digits(a.0, *p, *k);
                let terms: Vec<String> = digits
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| monomial(c, i, GF_SYMBOL))
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
            Arith::Product { left, right } => {
                let (x, y) = split_pair(a.0, right.size);
                format!("({},{})", left.name(x), right.name(y))
            }
            Arith::Matrix { k, base } => {
                let entries = matrix_entries(a.0, *k, base.size);
                let rows: Vec<String> = entries
                    .chunks(*k)
                    .map(|row| {
                        let cells: Vec<&str> = row.iter().map(|&e| base.name(e)).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Arith::Quotient { base, reps, .. } => base.name(reps[a.index()]).to_string(),
        }
    }

    /// Entries of a matrix-ring element in row-major order, as elements of
    /// the base ring. `None` unless this ring is a matrix ring.
    pub fn matrix_entries(&self, a: ElemId) -> Option<Vec<ElemId>> {
        match &self.arith {
            Arith::Matrix { k, base } => Some(matrix_entries(a.0, *k, base.size)),
            _ => None,
        }
    }

    /// Inverse of [`FiniteRing::matrix_entries`].
    pub fn matrix_from_entries(&self, entries: &[ElemId]) -> Option<ElemId> {
        match &self.arith {
            Arith::Matrix { k, base } if entries.len() == k * k => Some(matrix_index(entries, base.size)),
            _ => None,
        }
    }

    /// Component rings of a direct product.
    pub fn factors(&self) -> Option<(&FiniteRing, &FiniteRing)> {
        match &self.arith {
            Arith::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Splits a product element into its components.
    pub fn split(&self, a: ElemId) -> Option<(ElemId, ElemId)> {
        match &self.arith {
            Arith::Product { right, .. } => Some(split_pair(a.0, right.size)),
            _ => None,
        }
    }

    /// Builds the product element `(x, y)`.
    pub fn join(&self, x: ElemId, y: ElemId) -> Option<ElemId> {
        match &self.arith {
            Arith::Product { right, .. } => Some(pair(x, y, right.size)),
            _ => None,
        }
    }
}

fn gf_digits(mut a: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

fn gf_index(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn split_pair(a: u32, right_size: usize) -> (ElemId, ElemId) {
    let s = right_size as u32;
    (ElemId(a / s), ElemId(a % s))
}

fn pair(x: ElemId, y: ElemId, right_size: usize) -> ElemId {
    ElemId(x.0 * right_size as u32 + y.0)
}

/// Row-major entries; the first entry is the most significant digit.
fn matrix_entries(mut a: u32, k: usize, base_size: usize) -> Vec<ElemId> {
    let b = base_size as u32;
    let mut out = vec![ElemId(0); k * k];
    for slot in out.iter_mut().rev() {
        *slot = ElemId(a % b);
        a /= b;
    }
    out
}

fn matrix_index(entries: &[ElemId], base_size: usize) -> ElemId {
    ElemId(entries.iter().fold(0, |acc, e| acc * base_size as u32 + e.0))
}

/// Map from a ring onto its quotient by the nilradical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    map: Vec<ElemId>,
}

impl Projection {
    pub fn apply(&self, a: ElemId) -> ElemId {
        self.map[a.index()]
    }

    pub fn as_slice(&self) -> &[ElemId] {
        &self.map
    }
}

/// Constructs rings subject to a bound on carrier size.
#[derive(Debug, Clone, Copy)]
pub struct RingBuilder {
    cap: usize,
}

impl Default for RingBuilder {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl RingBuilder {
    pub fn new(cap: usize) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_size(&self, what: &str, size: Option<u64>) -> Result<usize> {
        match size {
            Some(s) if s <= self.cap as u64 => Ok(s as usize),
            Some(s) => {
                Err(Error::InvalidSpec(format!("{what} has {s} elements, above the cap of {}", self.cap)))
            }
            None => Err(Error::InvalidSpec(format!("{what} is too large"))),
        }
    }

    pub fn build(&self, spec: &RingSpec) -> Result<FiniteRing> {
        match spec {
            RingSpec::Zn(n) => self.zn(*n),
            RingSpec::Gf { p, k } => self.gf(*p, *k),
            RingSpec::Product(l, r) => {
                let (l, r) = (self.build(l)?, self.build(r)?);
                self.product(&l, &r)
            }
            RingSpec::Matrix(k, inner) => self.matrix(*k, &self.build(inner)?),
            RingSpec::NilQuotient(inner) => Ok(self.nil_quotient(&self.build(inner)?)?.0),
        }
    }

    /// Integers modulo `n`.
    pub fn zn(&self, n: u64) -> Result<FiniteRing> {
        if n < 2 {
            return Err(Error::InvalidSpec("Z_n: n must be ≥ 2".into()));
        }
        let size = self.check_size(&format!("Z{n}"), Some(n))?;
        Ok(FiniteRing::finish(RingSpec::Zn(n), size, Arith::Zn { n: n as u32 }, ElemId(0), ElemId(1), true))
    }

    /// GF(p^k) as Z_p[x] modulo the least monic irreducible of degree k.
    pub fn gf(&self, p: u64, k: u32) -> Result<FiniteRing> {
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("GF: {p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidSpec("GF: degree must be at least 1".into()));
        }
        let spec = RingSpec::Gf { p, k };
        let size = self.check_size(&spec.to_string(), p.checked_pow(k))?;
        if k == 1 {
            let mut ring = self.zn(p)?;
            ring.spec = spec;
            return Ok(ring);
        }
        let modulus = find_least_irreducible(p as u32, k as usize)?;
        Ok(FiniteRing::finish(
            spec,
            size,
            Arith::Gf { p: p as u32, k: k as usize, modulus },
            ElemId(0),
            ElemId(1),
            true,
        ))
    }

    /// Direct product with componentwise operations.
    pub fn product(&self, left: &FiniteRing, right: &FiniteRing) -> Result<FiniteRing> {
        let spec = RingSpec::product(left.spec.clone(), right.spec.clone());
        let size = self.check_size(&spec.to_string(), (left.size as u64).checked_mul(right.size as u64))?;
        let zero = pair(left.zero, right.zero, right.size);
        let one = pair(left.one, right.one, right.size);
        let commutative = left.commutative && right.commutative;
        Ok(FiniteRing::finish(
            spec,
            size,
            Arith::Product { left: Box::new(left.clone()), right: Box::new(right.clone()) },
            zero,
            one,
            commutative,
        ))
    }

    /// k×k matrices over a commutative ring.
    pub fn matrix(&self, k: u32, base: &FiniteRing) -> Result<FiniteRing> {
        if k == 0 {
            return Err(Error::InvalidSpec("matrix size must be at least 1".into()));
        }
        if !base.commutative {
            return Err(Error::InvalidSpec(format!("matrix ring over noncommutative {}", base.spec)));
        }
        let spec = RingSpec::matrix(k, base.spec.clone());
        let size = self.check_size(&spec.to_string(), (base.size as u64).checked_pow(k * k))?;
        let k = k as usize;
        let zero = matrix_index(&vec![base.zero; k * k], base.size);
        let identity: Vec<ElemId> =
            (0..k * k).map(|i| if i % (k + 1) == 0 { base.one } else { base.zero }).collect();
        let one = matrix_index(&identity, base.size);
        Ok(FiniteRing::finish(
            spec,
            size,
            Arith::Matrix { k, base: Box::new(base.clone()) },
            zero,
            one,
            k == 1,
        ))
    }

    /// R/Nil(R) on least coset representatives, with the projection map.
    pub fn nil_quotient(&self, base: &FiniteRing) -> Result<(FiniteRing, Projection)> {
        if !base.commutative {
            return Err(Error::Unsupported(format!("nilradical quotient of noncommutative {}", base.spec)));
        }
        let nil: Vec<ElemId> = base.nilpotent_set().ones().map(ElemId::new).collect();
        let mut proj = vec![None; base.size];
        let mut reps = Vec::new();
        for x in base.elements() {
            if proj[x.index()].is_some() {
                continue;
            }
            let id = ElemId::new(reps.len());
            reps.push(x);
            for &n in &nil {
                proj[base.add(x, n).index()] = Some(id);
            }
        }
        let proj: Vec<ElemId> = proj.into_iter().map(|p| p.expect("cosets cover R")).collect();
        let spec = RingSpec::nil_quotient(base.spec.clone());
        let size = reps.len();
        let zero = proj[base.zero.index()];
        let one = proj[base.one.index()];
        let ring = FiniteRing::finish(
            spec,
            size,
            Arith::Quotient { base: Box::new(base.clone()), reps, proj: proj.clone() },
            zero,
            one,
            true,
        );
        Ok((ring, Projection { map: proj }))
    }
}

/// Shorthand for [`RingBuilder::zn`] under the default cap.
pub fn make_zn(n: u64) -> Result<FiniteRing> {
    RingBuilder::default().zn(n)
}

/// Shorthand for [`RingBuilder::gf`] under the default cap.
pub fn make_gf(p: u64, k: u32) -> Result<FiniteRing> {
    RingBuilder::default().gf(p, k)
}

pub fn make_product(left: &FiniteRing, right: &FiniteRing) -> Result<FiniteRing> {
    RingBuilder::default().product(left, right)
}

pub fn make_matrix_ring(k: u32, base: &FiniteRing) -> Result<FiniteRing> {
    RingBuilder::default().matrix(k, base)
}

pub fn nilradical_quotient(base: &FiniteRing) -> Result<(FiniteRing, Projection)> {
    RingBuilder::default().nil_quotient(base)
}
