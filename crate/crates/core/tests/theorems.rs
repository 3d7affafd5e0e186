use wnc_core::invariants::{analyze, ChromaticIndex, Extended, ReportOptions, VizingClass};
use wnc_core::*;

fn suite(spec: &RingSpec) -> Vec<TheoremVerdict> {
    let r = FiniteRing::from_spec(spec).unwrap();
    let c = weakly_nil_clean_set(&r);
    let g = build_wnc_graph(&r, &c);
    theorem_suite(&r, &c, &g).unwrap()
}

fn status_of<'a>(v: &'a [TheoremVerdict], id: &str) -> &'a TheoremVerdict {
    v.iter().find(|t| t.id == id).unwrap_or_else(|| panic!("no verdict {id}"))
}

fn disagreeing(v: &[TheoremVerdict]) -> Vec<&'static str> {
    v.iter().filter(|t| t.is_disagreement()).map(|t| t.id).collect()
}

#[test]
fn ids_are_reported_in_order() {
    let v = suite(&RingSpec::Zn(10));
    assert!(v.iter().map(|t| t.id).eq(THEOREM_IDS));
}

#[test]
fn z10_agrees_everywhere() {
    let v = suite(&RingSpec::Zn(10));
    assert!(disagreeing(&v).is_empty(), "{:?}", disagreeing(&v));
    for id in [
        "completeness",
        "lifting",
        "degree",
        "connected",
        "girth",
        "z2p-clique",
        "four-cliques",
        "diameter-z2p",
        "sum-coloring",
        "class-one",
        "chromatic-index",
    ] {
        assert_eq!(status_of(&v, id).status, Status::Agree, "{id}");
    }
    assert_eq!(status_of(&v, "four-cliques").predicted, "{0,1,4,5} {0,1,5,9} {0,4,5,6} {0,5,6,9} {2,3,7,8}");
    assert_eq!(status_of(&v, "zp-clique").status, Status::NotApplicable);
}

#[test]
fn z12_completeness_and_diameter_one() {
    let v = suite(&RingSpec::Zn(12));
    for id in ["completeness", "diameter-one", "diameter-2k3l"] {
        assert_eq!(status_of(&v, id).status, Status::Agree, "{id}");
    }
    assert_eq!(status_of(&v, "completeness").computed, "complete");
}

#[test]
fn gf4_surfaces_characteristic_two_cases() {
    let v = suite(&RingSpec::Gf { p: 2, k: 2 });
    let girth = status_of(&v, "girth");
    assert_eq!((girth.predicted.as_str(), girth.computed.as_str()), ("3", "inf"));
    assert!(girth.known_discrepancy);
    let mut ids = disagreeing(&v);
    ids.sort_unstable();
    assert_eq!(ids, ["chromatic-index", "field-clique", "girth", "not-bipartite"]);
    assert!(v.iter().filter(|t| t.is_disagreement()).all(|t| t.known_discrepancy));
}

#[test]
fn gf8_girth_disagrees() {
    let v = suite(&RingSpec::Gf { p: 2, k: 3 });
    assert_eq!(status_of(&v, "girth").status, Status::Disagree);
    assert_eq!(status_of(&v, "diameter-field").status, Status::Agree);
}

#[test]
fn z3_class_one_claim_fails() {
    let v = suite(&RingSpec::Zn(3));
    let class = status_of(&v, "class-one");
    assert_eq!(class.status, Status::Disagree);
    assert_eq!(class.computed, "2");
    assert!(class.known_discrepancy);
    assert_eq!(status_of(&v, "chromatic-index").status, Status::Agree);
    assert_eq!(disagreeing(&v), ["class-one"]);
}

#[test]
fn product_diameter_applies_to_z3_squared() {
    let v = suite(&RingSpec::product(RingSpec::Zn(3), RingSpec::Zn(3)));
    assert_eq!(status_of(&v, "product-diameter").status, Status::Agree);
    let other = suite(&RingSpec::product(RingSpec::Zn(4), RingSpec::Zn(9)));
    assert_eq!(status_of(&other, "product-diameter").status, Status::NotApplicable);
}

#[test]
fn matrix_ring_connectedness_applies_only_to_mn_zn() {
    let v = suite(&RingSpec::matrix(2, RingSpec::Zn(2)));
    assert_eq!(status_of(&v, "connected").status, Status::Agree);
    assert_eq!(status_of(&v, "lifting").status, Status::NotApplicable);
    let w = suite(&RingSpec::matrix(2, RingSpec::Zn(3)));
    assert_eq!(status_of(&w, "connected").status, Status::NotApplicable);
}

#[test]
fn z2_small_ring_hypotheses() {
    let v = suite(&RingSpec::Zn(2));
    for id in ["girth", "not-bipartite", "not-star"] {
        assert_eq!(status_of(&v, id).status, Status::NotApplicable, "{id}");
    }
}

#[test]
fn odd_field_cliques_and_diameters() {
    for q in [9, 25, 27, 49] {
        let v = suite(&RingSpec::gf_order(q).unwrap());
        assert_eq!(status_of(&v, "field-clique").status, Status::Agree, "GF({q})");
        assert_eq!(status_of(&v, "diameter-field").computed, "inf");
    }
    for p in [5, 7, 11, 13, 17] {
        let v = suite(&RingSpec::Zn(p));
        assert_eq!(status_of(&v, "diameter-zp").status, Status::Agree, "Z{p}");
        assert_eq!(status_of(&v, "zp-clique").status, Status::Agree, "Z{p}");
    }
}

#[test]
fn mismatched_inputs_are_rejected() {
    let r10 = FiniteRing::from_spec(&RingSpec::Zn(10)).unwrap();
    let r11 = FiniteRing::from_spec(&RingSpec::Zn(11)).unwrap();
    let c10 = weakly_nil_clean_set(&r10);
    let g11 = build_wnc_graph(&r11, &weakly_nil_clean_set(&r11));
    assert!(matches!(theorem_suite(&r10, &c10, &g11), Err(Error::Mismatch(_))));
    let nc = build_nc_graph(&r10, &c10);
    assert!(theorem_suite(&r10, &c10, &nc).is_err());
}

#[test]
fn report_fields_for_z10_and_gf25() {
    let r = FiniteRing::from_spec(&RingSpec::Zn(10)).unwrap();
    let c = weakly_nil_clean_set(&r);
    let g = build_wnc_graph(&r, &c);
    let rep = analyze(&r, &c, &g, ReportOptions { four_cliques: true, ..Default::default() }).unwrap();
    assert_eq!(rep.clique_number, 4);
    assert_eq!(rep.girth, Extended::Finite(3));
    assert_eq!(rep.chromatic_index, ChromaticIndex::Exact(6));
    assert_eq!(rep.vizing_class, VizingClass::One);
    assert_eq!(rep.four_cliques.as_ref().map(Vec::len), Some(5));
    assert_eq!(rep.theorem_verdicts.len(), THEOREM_IDS.len());

    let f = FiniteRing::from_spec(&RingSpec::Gf { p: 5, k: 2 }).unwrap();
    let c = weakly_nil_clean_set(&f);
    let g = build_wnc_graph(&f, &c);
    let rep = analyze(&f, &c, &g, ReportOptions::default()).unwrap();
    assert_eq!(rep.component_sizes, [5, 10, 10]);
    assert_eq!(rep.diameter, Extended::Infinite);
    assert!(rep.four_cliques.is_none());
}
