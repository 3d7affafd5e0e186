use wnc_core::invariants::paths::*;
use wnc_core::*;

fn cycle_graph(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

fn path_graph(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Floyd–Warshall diameter oracle.
#[allow(clippy::needless_range_loop)]
fn floyd_diameter(g: &SimpleGraph) -> Extended {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in g.row(i).ones() {
            d[i][j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    if m >= inf {
        Extended::Infinite
    } else {
        Extended::Finite(m)
    }
}

#[test]
fn cycles_and_paths() {
    for n in 3..12 {
        let c = cycle_graph(n);
        let gi = girth(&c);
        assert_eq!(gi.length, Extended::Finite(n));
        assert!(is_cycle(&c, &gi.cycle));
        assert_eq!(diameter(&c), Extended::Finite(n / 2));
        assert_eq!(is_bipartite(&c), n % 2 == 0);
        let p = path_graph(n);
        assert_eq!(girth(&p).length, Extended::Infinite);
        assert_eq!(diameter(&p), Extended::Finite(n - 1));
        assert!(is_bipartite(&p));
        assert_eq!(is_star(&p), n == 3);
    }
}

#[test]
fn odd_cycle_witness() {
    let g = cycle_graph(7);
    match bipartition(&g) {
        Bipartition::OddCycle(c) => {
            assert!(is_cycle(&g, &c));
            assert_eq!(c.len() % 2, 1);
        }
        other => panic!("expected odd cycle, got {other:?}"),
    }
}

#[test]
fn disconnected() {
    let g = SimpleGraph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
    assert_eq!(component_sizes(&g), [2, 3]);
    assert_eq!(diameter(&g), Extended::Infinite);
    assert_eq!(floyd_diameter(&g), Extended::Infinite);
}

#[test]
fn stars() {
    assert!(is_star(&SimpleGraph::from_edges(2, &[(0, 1)]).unwrap()));
    let k13 = SimpleGraph::from_edges(4, &[(2, 0), (2, 1), (2, 3)]).unwrap();
    assert!(is_star(&k13));
    assert!(!is_star(&SimpleGraph::empty(1)));
    assert!(!is_star(&cycle_graph(3)));
}

#[test]
fn extended_serializes_with_inf_sentinel() {
    assert_eq!(Extended::Infinite.to_string(), "inf");
    assert!(Extended::Finite(3) < Extended::Infinite);
}

use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..14).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            SimpleGraph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

/// Smallest cycle by exhaustive search over ordered vertex sequences of
/// length 3 and 4.
fn short_cycle_oracle(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in g.row(a).ones() {
            for c in g.row(b).ones() {
                if c != a && g.has_edge(c, a) {
                    return Some(3);
                }
            }
        }
    }
    for a in 0..n {
        for b in g.row(a).ones() {
            for c in g.row(b).ones().filter(|&c| c != a) {
                for d in g.row(c).ones().filter(|&d| d != b && d != a) {
                    if g.has_edge(d, a) {
                        return Some(4);
                    }
                }
            }
        }
    }
    None
}

proptest! {
    #[test]
    fn diameter_matches_floyd(g in arb_graph()) {
        prop_assert_eq!(diameter(&g), floyd_diameter(&g));
    }

    #[test]
    fn girth_is_witnessed_and_minimal(g in arb_graph()) {
        let gi = girth(&g);
        match gi.length {
            Extended::Finite(len) => {
                prop_assert!(is_cycle(&g, &gi.cycle));
                prop_assert_eq!(gi.cycle.len(), len);
                if let Some(short) = short_cycle_oracle(&g) {
                    prop_assert_eq!(len, short);
                } else {
                    prop_assert!(len >= 5);
                }
            }
            Extended::Infinite => {
                prop_assert!(short_cycle_oracle(&g).is_none());
                // a forest has fewer edges than vertices per component
                prop_assert_eq!(g.edge_count() + component_sizes(&g).len(), g.vertex_count());
            }
        }
    }

    #[test]
    fn bipartition_witnesses(g in arb_graph()) {
        match bipartition(&g) {
            Bipartition::TwoColoring(side) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(side[u], side[v]);
                }
            }
            Bipartition::OddCycle(c) => {
                prop_assert!(is_cycle(&g, &c));
                prop_assert_eq!(c.len() % 2, 1);
            }
        }
    }

    #[test]
    fn component_sizes_sum(g in arb_graph()) {
        let sizes = component_sizes(&g);
        prop_assert_eq!(sizes.iter().sum::<usize>(), g.vertex_count());
        if g.vertex_count() >= 2 {
            prop_assert_eq!(diameter(&g).is_infinite(), sizes.len() > 1);
        }
    }
}
