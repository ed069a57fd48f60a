use chromon::census::census_for_order;
use chromon::homology::analyze_homology;
use chromon::{analyze, decompose, enumerate_faces, enumerate_jackets, Mode, DEFAULT_BUDGET};
use chromon_bench::{order_twelve, subdivided_sphere};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("d3_n8_one_thread", |b| {
        b.iter(|| census_for_order(3, 8, Mode::Labeled, 1, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("d3_n8_canonical", |b| {
        b.iter(|| census_for_order(3, 8, Mode::Canonical, 1, DEFAULT_BUDGET).unwrap())
    });
    group.finish();
}

fn per_graph(c: &mut Criterion) {
    let g = order_twelve();
    c.bench_function("analyze_n12", |b| b.iter(|| analyze(black_box(&g)).unwrap()));
    c.bench_function("jackets_n12", |b| {
        b.iter(|| enumerate_jackets(black_box(&g), &enumerate_faces(&g)).unwrap())
    });
    c.bench_function("decompose_n12", |b| b.iter(|| decompose(black_box(&g), "0,1,2,3").unwrap()));
}

fn subdivision(c: &mut Criterion) {
    let mut group = c.benchmark_group("subdivision");
    group.sample_size(10);
    group.bench_function("colorize_4_simplex_boundary", |b| b.iter(|| subdivided_sphere(3)));
    let g = subdivided_sphere(3);
    group.bench_function("homology_4_simplex_boundary", |b| {
        b.iter(|| analyze_homology(black_box(&g)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, census, per_graph, subdivision);
criterion_main!(benches);
