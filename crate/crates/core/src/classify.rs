//! Idempotent, nilpotent, nil clean and weakly nil clean element classes.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::ring::{ElemId, FiniteRing};

/// Which form a decomposition takes: `x = n + e` or `x = n - e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Decomposition type: 1 for the plus form, 2 for the minus form.
    pub fn decomposition_type(self) -> u8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => 2,
        }
    }
}

/// Witness that `x = nilpotent + idempotent` or `x = nilpotent - idempotent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Decomposition {
    pub nilpotent: ElemId,
    pub idempotent: ElemId,
    pub sign: Sign,
}

impl Decomposition {
    /// Recomputes the element this decomposition represents.
    pub fn value(&self, ring: &FiniteRing) -> ElemId {
        match self.sign {
            Sign::Plus => ring.add(self.nilpotent, self.idempotent),
            Sign::Minus => ring.sub(self.nilpotent, self.idempotent),
        }
    }
}

/// The set of decomposition types an element admits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TypeSet {
    pub type1: bool,
    pub type2: bool,
}

impl TypeSet {
    pub fn is_empty(&self) -> bool {
        !self.type1 && !self.type2
    }

    pub fn contains(&self, t: u8) -> bool {
        match t {
            1 => self.type1,
            2 => self.type2,
            _ => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub idem: FixedBitSet,
    pub nil: FixedBitSet,
    pub nc: FixedBitSet,
    pub wnc: FixedBitSet,
    witnesses: Vec<Vec<Decomposition>>,
}

impl Classification {
    /// Every decomposition of `x`, ordered by (nilpotent, idempotent, sign).
    pub fn witnesses(&self, x: ElemId) -> &[Decomposition] {
        &self.witnesses[x.index()]
    }

    pub fn types(&self, x: ElemId) -> TypeSet {
        let mut t = TypeSet::default();
        for d in self.witnesses(x) {
            match d.sign {
                Sign::Plus => t.type1 = true,
                Sign::Minus => t.type2 = true,
            }
        }
        t
    }

    pub fn is_weakly_nil_clean(&self, x: ElemId) -> bool {
        self.wnc.contains(x.index())
    }

    pub fn is_nil_clean(&self, x: ElemId) -> bool {
        self.nc.contains(x.index())
    }

    pub fn size(&self) -> usize {
        self.idem.len()
    }

    pub fn wnc_count(&self) -> usize {
        self.wnc.count_ones(..)
    }

    /// Every element is weakly nil clean.
    pub fn is_weakly_nil_clean_ring(&self) -> bool {
        self.wnc.count_ones(..) == self.size()
    }

    /// Every element is nil clean.
    pub fn is_nil_clean_ring(&self) -> bool {
        self.nc.count_ones(..) == self.size()
    }
}

pub fn idempotents(ring: &FiniteRing) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.size());
    for x in ring.elements().filter(|&x| ring.mul(x, x) == x) {
        set.insert(x.index());
    }
    set
}

pub fn nilpotents(ring: &FiniteRing) -> FixedBitSet {
    ring.nilpotent_set()
}

/// Marks `n + e` and `n - e` for every pair in Nil(R) × Idem(R).
pub fn weakly_nil_clean_set(ring: &FiniteRing) -> Classification {
    let n = ring.size();
    let idem = idempotents(ring);
    let nil = nilpotents(ring);
    let mut nc = FixedBitSet::with_capacity(n);
    let mut wnc = FixedBitSet::with_capacity(n);
    let mut witnesses = vec![Vec::new(); n];
    for nilpotent in nil.ones().map(ElemId::new) {
        for idempotent in idem.ones().map(ElemId::new) {
            for sign in [Sign::Plus, Sign::Minus] {
                let d = Decomposition { nilpotent, idempotent, sign };
                let x = d.value(ring);
                if sign == Sign::Plus {
                    nc.insert(x.index());
                }
                wnc.insert(x.index());
                witnesses[x.index()].push(d);
            }
        }
    }
    Classification { idem, nil, nc, wnc, witnesses }
}

pub fn is_weakly_nil_clean_ring(ring: &FiniteRing) -> bool {
    weakly_nil_clean_set(ring).is_weakly_nil_clean_ring()
}

pub fn is_nil_clean_ring(ring: &FiniteRing) -> bool {
    weakly_nil_clean_set(ring).is_nil_clean_ring()
}
