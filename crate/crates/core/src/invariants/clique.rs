//! Exact maximum clique (branch and bound with greedy coloring bounds) and
//! k-clique enumeration.

use fixedbitset::FixedBitSet;

use crate::graph::SimpleGraph;

/// Candidates ordered by greedy color class, with the running color count
/// as an upper bound on the clique size within each prefix.
fn color_sort(g: &SimpleGraph, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut open = uncolored.clone();
        while let Some(v) = open.ones().next() {
            open.set(v, false);
            open.difference_with(g.row(v));
            uncolored.set(v, false);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

struct Search<'g> {
    g: &'g SimpleGraph,
    current: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a clique of this size is found.
    target: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn expand(&mut self, mut cand: FixedBitSet) {
        let (order, bounds) = color_sort(self.g, &cand);
        for i in (0..order.len()).rev() {
            if self.done() || self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.row(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
        }
    }
}

fn search(g: &SimpleGraph, cand: FixedBitSet, target: Option<usize>) -> Vec<usize> {
    let mut s = Search { g, current: Vec::new(), best: Vec::new(), target };
    if !cand.is_clear() {
        s.expand(cand);
    }
    s.best
}

/// Clique number only.
pub fn clique_number(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if n > 0 && g.is_complete() {
        return n;
    }
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search(g, all, None).len()
}

/// Whether `cand` contains a clique of `size` vertices.
fn has_clique(g: &SimpleGraph, cand: &FixedBitSet, size: usize) -> bool {
    size == 0 || search(g, cand.clone(), Some(size)).len() >= size
}

/// A maximum clique (the lexicographically least one, as a sorted vertex
/// list) together with the clique number.
pub fn max_clique(g: &SimpleGraph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let omega = clique_number(g);
    if omega == n {
        return ((0..n).collect(), n);
    }
    let mut chosen = Vec::with_capacity(omega);
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    while chosen.len() < omega {
        let need = omega - chosen.len() - 1;
        let v = cand
            .ones()
            .find(|&v| {
                let mut sub = later_neighbors(g, &cand, v);
                sub.intersect_with(g.row(v));
                has_clique(g, &sub, need)
            })
            .expect("a maximum clique extends the chosen prefix");
        chosen.push(v);
        let mut sub = later_neighbors(g, &cand, v);
        sub.intersect_with(g.row(v));
        cand = sub;
    }
    (chosen, omega)
}

/// `cand ∩ {w > v}`.
fn later_neighbors(g: &SimpleGraph, cand: &FixedBitSet, v: usize) -> FixedBitSet {
    let mut sub = cand.clone();
    sub.set_range(..v + 1, false);
    debug_assert_eq!(sub.len(), g.vertex_count());
    sub
}

/// All vertex sets of size `k` inducing a complete subgraph, each sorted, in
/// lexicographic order.
pub fn enumerate_k_cliques(g: &SimpleGraph, k: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &SimpleGraph,
        cand: &FixedBitSet,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        if current.len() + cand.count_ones(..) < k {
            return;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.set_range(..v + 1, false);
            next.intersect_with(g.row(v));
            current.push(v);
            walk(g, &next, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut all = FixedBitSet::with_capacity(g.vertex_count());
    all.insert_range(..);
    walk(g, &all, k, &mut Vec::new(), &mut out);
    out
}

pub fn is_clique(g: &SimpleGraph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}
