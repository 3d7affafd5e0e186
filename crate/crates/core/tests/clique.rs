use proptest::prelude::*;
use wnc_core::invariants::clique::*;
use wnc_core::*;

/// Exhaustive oracle: walk every vertex subset, pruning only subsets that
/// already fail to be cliques. Returns the lexicographically least
/// maximum clique.
fn oracle(g: &SimpleGraph) -> Vec<usize> {
    fn rec(g: &SimpleGraph, i: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if i == g.vertex_count() {
            if cur.len() > best.len() || (cur.len() == best.len() && *cur < *best) {
                *best = cur.clone();
            }
            return;
        }
        if cur.iter().all(|&u| g.has_edge(u, i)) {
            cur.push(i);
            rec(g, i + 1, cur, best);
            cur.pop();
        }
        rec(g, i + 1, cur, best);
    }
    let mut best = Vec::new();
    rec(g, 0, &mut Vec::new(), &mut best);
    best
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..16, 0.0f64..1.0).prop_flat_map(|(n, density)| {
        proptest::collection::vec(0.0f64..1.0, n * (n - 1) / 2).prop_map(move |coins| {
            let mut it = coins.into_iter();
            SimpleGraph::from_fn(n, |_, _| it.next().unwrap() < density)
        })
    })
}

proptest! {
    #[test]
    fn max_clique_matches_exhaustive(g in arb_graph()) {
        let (clique, omega) = max_clique(&g);
        prop_assert_eq!(omega, clique.len());
        prop_assert!(is_clique(&g, &clique));
        prop_assert_eq!(clique, oracle(&g));
    }

    #[test]
    fn k_cliques_are_exactly_the_complete_subsets(g in arb_graph(), k in 1usize..5) {
        let found = enumerate_k_cliques(&g, k);
        let n = g.vertex_count();
        let mut brute = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        if k <= n {
            loop {
                if is_clique(&g, &idx) {
                    brute.push(idx.clone());
                }
                // next k-combination in lexicographic order
                let mut i = k;
                while i > 0 && idx[i - 1] == n - k + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for j in i..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        prop_assert_eq!(found, brute);
    }
}

#[test]
fn singletons_and_empty() {
    let g = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
    assert_eq!(enumerate_k_cliques(&g, 1), [[0], [1], [2]]);
    assert_eq!(max_clique(&SimpleGraph::empty(0)), (vec![], 0));
    assert_eq!(max_clique(&SimpleGraph::empty(3)), (vec![0], 1));
}

#[test]
fn complete_graph_shortcut() {
    let k6 = SimpleGraph::from_fn(6, |_, _| true);
    assert_eq!(max_clique(&k6), ((0..6).collect(), 6));
}
