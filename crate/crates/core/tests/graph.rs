use fixedbitset::FixedBitSet;
use wnc_core::classify::weakly_nil_clean_set;
use wnc_core::graph::*;
use wnc_core::ring::{make_gf, make_zn, nilradical_quotient, RingBuilder, RingSpec};
use wnc_core::*;

fn wnc(ring: &FiniteRing) -> (Classification, WncGraph) {
    let c = weakly_nil_clean_set(ring);
    let g = build_wnc_graph(ring, &c);
    (c, g)
}

fn members(s: &FixedBitSet) -> Vec<usize> {
    s.ones().collect()
}

#[test]
fn z10_vertex_zero() {
    let r = make_zn(10).unwrap();
    let (_, g) = wnc(&r);
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(members(g.row(0)), [1, 4, 5, 6, 9]);
    assert_eq!(g.degree(0).unwrap(), 5);
    assert_eq!(g.degree(1).unwrap(), 6);
}

#[test]
fn z2_is_a_single_edge() {
    let (_, g) = wnc(&make_zn(2).unwrap());
    assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1)]);
    assert_eq!(g.degree(0).unwrap(), 1);
}

#[test]
fn out_of_range_vertex() {
    let (_, g) = wnc(&make_zn(5).unwrap());
    assert!(matches!(g.degree(5), Err(Error::VertexOutOfRange { vertex: 5, count: 5 })));
    assert!(g.neighborhood(9).is_err());
}

#[test]
fn neighborhood_intersections() {
    let (_, g10) = wnc(&make_zn(10).unwrap());
    // 2 and 8 = -2 are both in the lemma's exclusion set for p = 5
    let mut both = g10.neighborhood(2).unwrap();
    both.intersect_with(g10.row(8));
    assert_eq!(members(&both), [3, 7]);
    let (_, g14) = wnc(&make_zn(14).unwrap());
    let mut both = g14.neighborhood(2).unwrap();
    both.intersect_with(g14.row(12));
    assert!(both.is_clear());
    for v in 0..14 {
        assert!(!g14.row(v).contains(v));
    }
}

#[test]
fn nc_graph_examples() {
    let z4 = make_zn(4).unwrap();
    let c = weakly_nil_clean_set(&z4);
    assert!(build_nc_graph(&z4, &c).is_complete());
    let z3 = make_zn(3).unwrap();
    let c = weakly_nil_clean_set(&z3);
    let g = build_nc_graph(&z3, &c);
    assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
    assert_eq!(g.kind(), GraphKind::NilClean);
}

#[test]
fn gf25_is_disconnected_but_prime_subfield_is_joined() {
    let (_, g) = wnc(&make_gf(5, 2).unwrap());
    // 0 only reaches the prime subfield
    assert!(g.row(0).ones().all(|v| v < 5));
}

fn corpus() -> Vec<FiniteRing> {
    let b = RingBuilder::default();
    let mut specs: Vec<RingSpec> = (2..=36).map(RingSpec::Zn).collect();
    for q in [4, 8, 9, 25, 27] {
        specs.push(RingSpec::gf_order(q).unwrap());
    }
    specs.push(RingSpec::product(RingSpec::Zn(3), RingSpec::Zn(3)));
    specs.push(RingSpec::product(RingSpec::Zn(4), RingSpec::Zn(9)));
    specs.push(RingSpec::matrix(2, RingSpec::Zn(2)));
    specs.iter().map(|s| b.build(s).unwrap()).collect()
}

#[test]
fn edge_law_and_structure_on_corpus() {
    for r in corpus() {
        let (c, g) = wnc(&r);
        let nc = build_nc_graph(&r, &c);
        for u in r.elements() {
            assert!(!g.row(u.index()).contains(u.index()));
            for v in r.elements() {
                let expect = u != v && c.is_weakly_nil_clean(r.add(u, v));
                assert_eq!(g.has_edge(u.index(), v.index()), expect);
                assert_eq!(g.has_edge(u.index(), v.index()), g.has_edge(v.index(), u.index()));
            }
            assert_eq!(g.degree_of(u).unwrap(), predicted_degree(&r, &c, u), "{}", r.spec());
        }
        assert!(nc.is_subgraph_of(&g));
        assert_eq!(g.is_complete(), c.is_weakly_nil_clean_ring(), "{}", r.spec());
    }
}

#[test]
fn adjacency_lifts_from_quotient() {
    let b = RingBuilder::default();
    for spec in [
        RingSpec::Zn(8),
        RingSpec::Zn(12),
        RingSpec::Zn(18),
        RingSpec::product(RingSpec::Zn(4), RingSpec::Zn(9)),
    ] {
        let r = b.build(&spec).unwrap();
        let (q, proj) = nilradical_quotient(&r).unwrap();
        let (_, gq) = wnc(&q);
        let (_, g) = wnc(&r);
        for a in r.elements() {
            for bb in r.elements() {
                let (x, y) = (proj.apply(a), proj.apply(bb));
                if a != bb && gq.has_edge(x.index(), y.index()) {
                    assert!(g.has_edge(a.index(), bb.index()));
                }
            }
        }
    }
}

#[test]
fn from_edges_validation() {
    assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
    assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
    let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(g.edge_count(), 2);
    assert_eq!(g.max_degree(), 2);
}
