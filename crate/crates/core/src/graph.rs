//! Simple undirected graphs on bitset rows, and the weakly nil clean graph.

use std::ops::Deref;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::classify::Classification;
use crate::error::{Error, Result};
use crate::ring::{ElemId, FiniteRing};

/// Loop-free undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self { rows: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Builds a graph from an edge list. Loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::Mismatch(format!("loop at vertex {u}")));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Graph with `u ~ v` iff `u != v` and `adjacent(u, v)`; `adjacent` must
    /// be symmetric.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.rows[v].count_ones(..))
    }

    pub fn neighborhood(&self, v: usize) -> Result<FixedBitSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.rows.iter().all(|r| r.count_ones(..) + 1 == n)
    }

    /// Every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    WeaklyNilClean,
    NilClean,
}

/// G_WN(R) or G_N(R): vertices are ring elements, `x ~ y` iff `x != y` and
/// `x + y` lies in the chosen class.
#[derive(Debug, Clone)]
pub struct WncGraph {
    graph: SimpleGraph,
    kind: GraphKind,
    ring: String,
}

impl WncGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Display form of the ring the graph was built from.
    pub fn ring_label(&self) -> &str {
        &self.ring
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn degree_of(&self, v: ElemId) -> Result<usize> {
        self.graph.degree(v.index())
    }

    pub fn neighborhood_of(&self, v: ElemId) -> Result<FixedBitSet> {
        self.graph.neighborhood(v.index())
    }
}

impl Deref for WncGraph {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.graph
    }
}

fn build(ring: &FiniteRing, class: &FixedBitSet, kind: GraphKind) -> WncGraph {
    let graph = SimpleGraph::from_fn(ring.size(), |u, v| {
        class.contains(ring.add(ElemId::new(u), ElemId::new(v)).index())
    });
    WncGraph { graph, kind, ring: ring.spec().to_string() }
}

pub fn build_wnc_graph(ring: &FiniteRing, c: &Classification) -> WncGraph {
    build(ring, &c.wnc, GraphKind::WeaklyNilClean)
}

pub fn build_nc_graph(ring: &FiniteRing, c: &Classification) -> WncGraph {
    build(ring, &c.nc, GraphKind::NilClean)
}

/// Degree predicted from the class size: |WNC(R)| - 1 if 2x is weakly nil
/// clean, else |WNC(R)|.
pub fn predicted_degree(ring: &FiniteRing, c: &Classification, x: ElemId) -> usize {
    let doubled = ring.add(x, x);
    c.wnc_count() - usize::from(c.is_weakly_nil_clean(doubled))
}
