use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use wnc_core::invariants::{
    chromatic_index_search, diameter, enumerate_k_cliques, girth, max_clique, sum_edge_coloring,
    DEFAULT_BUDGET,
};
use wnc_core::{build_wnc_graph, weakly_nil_clean_set, FiniteRing, RingSpec, WncGraph};

fn graph_of(spec: &RingSpec) -> (FiniteRing, WncGraph) {
    let ring = FiniteRing::from_spec(spec).unwrap();
    let g = build_wnc_graph(&ring, &weakly_nil_clean_set(&ring));
    (ring, g)
}

fn specs() -> Vec<RingSpec> {
    vec![
        RingSpec::Zn(26),
        RingSpec::Zn(100),
        RingSpec::Gf { p: 5, k: 3 },
        RingSpec::product(RingSpec::Zn(3), RingSpec::Zn(5)),
        RingSpec::matrix(2, RingSpec::Zn(3)),
    ]
}

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for spec in specs() {
        group.bench_with_input(BenchmarkId::from_parameter(&spec), &spec, |b, s| {
            b.iter(|| graph_of(black_box(s)))
        });
    }
    group.finish();
}

fn cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_clique");
    for spec in specs() {
        let (_, g) = graph_of(&spec);
        group
            .bench_with_input(BenchmarkId::from_parameter(&spec), g.graph(), |b, g| b.iter(|| max_clique(g)));
    }
    group.finish();
    let (_, g) = graph_of(&RingSpec::Zn(26));
    c.bench_function("enumerate_4_cliques/Z26", |b| b.iter(|| enumerate_k_cliques(g.graph(), 4)));
}

fn paths(c: &mut Criterion) {
    let (_, g) = graph_of(&RingSpec::matrix(2, RingSpec::Zn(3)));
    c.bench_function("diameter/M2(Z3)", |b| b.iter(|| diameter(g.graph())));
    c.bench_function("girth/M2(Z3)", |b| b.iter(|| girth(g.graph())));
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_index");
    // rings whose search finishes well inside the budget without a hint
    for spec in [RingSpec::Zn(14), RingSpec::Zn(30), RingSpec::Zn(55)] {
        let (_, g) = graph_of(&spec);
        group.bench_with_input(BenchmarkId::new("search", &spec), g.graph(), |b, g| {
            b.iter(|| chromatic_index_search(g, None, DEFAULT_BUDGET))
        });
    }
    for spec in [RingSpec::Zn(21), RingSpec::matrix(2, RingSpec::Zn(3))] {
        let (ring, g) = graph_of(&spec);
        let hint = sum_edge_coloring(&ring, &g).unwrap();
        group.bench_with_input(BenchmarkId::new("hinted", &spec), g.graph(), |b, g| {
            b.iter(|| chromatic_index_search(g, Some(&hint), DEFAULT_BUDGET))
        });
    }
    group.finish();
}

criterion_group!(benches, build, cliques, paths, coloring);
criterion_main!(benches);
