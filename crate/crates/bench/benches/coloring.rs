use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use starcolor_bench as inst;
use starcolor_core::{colorers, exact, verify};

fn exact_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for (name, g) in inst::exact_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| exact::star_index(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn check_star(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_star");
    for (name, g, col) in inst::check_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &(g, col), |b, (g, col)| {
            b.iter(|| verify::check_star(black_box(g), black_box(col)).unwrap())
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("colorers");
    for leaves in [100, 1_000] {
        let hg = inst::cubic_halin(leaves);
        group.bench_with_input(BenchmarkId::new("cubic-halin", leaves), &hg, |b, hg| {
            b.iter(|| colorers::color_cubic_halin(black_box(hg)).unwrap())
        });
    }
    let hg = inst::complete_halin();
    group.bench_function("complete-halin", |b| {
        b.iter(|| colorers::color_complete_halin(black_box(&hg)).unwrap())
    });
    for n in [1_001, 10_001] {
        group.bench_with_input(BenchmarkId::new("cycle-square", n), &n, |b, &n| {
            b.iter(|| colorers::color_cycle_square(n).unwrap())
        });
    }
    group.bench_function("necklace-999", |b| b.iter(|| colorers::color_necklace_odd(999).unwrap()));
    group.bench_function("petersen-3n-1000", |b| {
        b.iter(|| colorers::color_petersen_3n(1_000).unwrap())
    });
    group.finish();
}

criterion_group!(benches, exact_search, check_star, constructions);
criterion_main!(benches);
