use wnc_core::classify::weakly_nil_clean_set;
use wnc_core::graph::build_wnc_graph;
use wnc_core::invariants::neighborhood::*;
use wnc_core::ring::make_zn;

fn run(n: u64) -> Vec<PairVerdict> {
    let r = make_zn(n).unwrap();
    let g = build_wnc_graph(&r, &weakly_nil_clean_set(&r));
    neighborhood_disjointness_check(&r, &g).unwrap()
}

#[test]
fn z10_sweep_is_vacuous() {
    assert!(run(10).is_empty());
}

#[test]
fn z14_pairs() {
    let v = run(14);
    let pairs = |c: Clause| -> Vec<(usize, usize)> {
        v.iter().filter(|x| x.clause == c).map(|x| (x.a, x.b)).collect()
    };
    assert_eq!(pairs(Clause::Negation), [(2, 12), (5, 9), (9, 5), (12, 2)]);
    assert_eq!(pairs(Clause::SumOne), [(2, 13), (6, 9), (9, 6), (13, 2)]);
    assert_eq!(pairs(Clause::SumMinusOne), [(1, 12), (5, 8), (8, 5), (12, 1)]);
    assert!(v.iter().all(|x| x.disjoint));
}

#[test]
fn larger_primes_hold() {
    for p in [11u64, 13, 17, 19] {
        let v = run(2 * p);
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.disjoint), "Z_{}", 2 * p);
    }
}

#[test]
fn wrong_shape() {
    let r = make_zn(12).unwrap();
    let g = build_wnc_graph(&r, &weakly_nil_clean_set(&r));
    assert!(neighborhood_disjointness_check(&r, &g).is_err());
    let r6 = make_zn(6).unwrap();
    assert_eq!(z2p_prime(&r6), None);
}
