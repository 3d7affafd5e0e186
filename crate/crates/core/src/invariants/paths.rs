//! Connectivity, distances, cycles and bipartiteness.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::graph::SimpleGraph;

/// A count that may be infinite (diameter of a disconnected graph, girth of
/// a forest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Extended::Infinite
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Connected components ordered by least vertex.
pub fn components(g: &SimpleGraph) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let reach = reachable(g, start);
        seen.union_with(&reach);
        out.push(reach);
    }
    out
}

pub fn component_sizes(g: &SimpleGraph) -> Vec<usize> {
    components(g).iter().map(|c| c.count_ones(..)).collect()
}

fn reachable(g: &SimpleGraph, start: usize) -> FixedBitSet {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(start);
    let mut queue = vec![start];
    while let Some(u) = queue.pop() {
        for v in g.row(u).ones() {
            if !seen.put(v) {
                queue.push(v);
            }
        }
    }
    seen
}

/// Largest BFS level reached from `source`, or `None` if some vertex is
/// unreachable. Frontiers advance by OR-ing adjacency rows.
pub fn eccentricity(g: &SimpleGraph, source: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut visited = FixedBitSet::with_capacity(n);
    visited.insert(source);
    let mut frontier = visited.clone();
    let mut level = 0;
    while visited.count_ones(..) < n {
        let mut next = FixedBitSet::with_capacity(n);
        for u in frontier.ones() {
            next.union_with(g.row(u));
        }
        next.difference_with(&visited);
        if next.is_clear() {
            return None;
        }
        visited.union_with(&next);
        frontier = next;
        level += 1;
    }
    Some(level)
}

/// Maximum distance over pairs of distinct vertices.
pub fn diameter(g: &SimpleGraph) -> Extended {
    if g.vertex_count() > 1 && g.is_complete() {
        return Extended::Finite(1);
    }
    let mut best = 0;
    for v in 0..g.vertex_count() {
        match eccentricity(g, v) {
            Some(e) => best = best.max(e),
            None => return Extended::Infinite,
        }
    }
    Extended::Finite(best)
}

/// Shortest cycle length and one cycle attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Girth {
    pub length: Extended,
    /// Vertices of a shortest cycle in traversal order; empty for forests.
    pub cycle: Vec<usize>,
}

pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if best.as_ref().is_some_and(|c| c.len() == 3) {
            break;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            if let Some(c) = &best {
                // any cycle closed from here has length >= 2·dist(u) + 1
                if 2 * dist[u] + 1 >= c.len() {
                    break;
                }
            }
            for w in g.row(u).ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let cycle = close_cycle(&parent, root, u, w);
                    if best.as_ref().is_none_or(|c| cycle.len() < c.len()) {
                        let done = cycle.len() == 3;
                        best = Some(cycle);
                        if done {
                            break 'bfs;
                        }
                    }
                }
            }
        }
    }
    match best {
        Some(cycle) => Girth { length: Extended::Finite(cycle.len()), cycle },
        None => Girth { length: Extended::Infinite, cycle: Vec::new() },
    }
}

/// Cycle formed by the tree paths root→u, root→w and the edge u–w, with the
/// shared prefix of the two paths removed.
fn close_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parent[v];
            p.push(v);
        }
        p.reverse();
        p
    };
    let (pu, pw) = (path(u), path(w));
    let shared = pu.iter().zip(&pw).take_while(|(a, b)| a == b).count();
    let mut cycle: Vec<usize> = pu[shared - 1..].to_vec();
    cycle.extend(pw[shared..].iter().rev());
    cycle
}

/// True if `cycle` lists at least three distinct vertices, consecutive ones
/// (cyclically) adjacent.
pub fn is_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    cycle.len() >= 3
        && sorted.len() == cycle.len()
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side of each vertex (`false`/`true`).
    TwoColoring(Vec<bool>),
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::TwoColoring(_))
    }
}

pub fn bipartition(g: &SimpleGraph) -> Bipartition {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let s = side[u].unwrap();
            for w in g.row(u).ones() {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(t) if t == s => {
                        return Bipartition::OddCycle(close_cycle(&parent, root, u, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition::TwoColoring(side.into_iter().map(|s| s.unwrap()).collect())
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    bipartition(g).is_bipartite()
}

/// True iff the whole graph is K_{1,m} for some m >= 1.
pub fn is_star(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|v| g.row(v).count_ones(..) == n - 1)
}
