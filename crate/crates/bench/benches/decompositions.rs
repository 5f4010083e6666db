use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pathchrom::constructions::{geometric_path_decomposition_g, natural_tree_decomposition_h};
use pathchrom::{build_g, build_h, build_shift, decomposition_chromatic, pchr_exact, verify_path_decomposition};

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_g");
    for n in [4, 5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| build_g(black_box(n))));
    }
    group.finish();
}

fn geometric(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric");
    group.sample_size(10);
    for n in [4, 6] {
        let g = build_g(n).unwrap();
        let d = geometric_path_decomposition_g(n, true).unwrap().decomposition;
        group.bench_with_input(BenchmarkId::new("verify", n), &n, |b, _| {
            b.iter(|| verify_path_decomposition(&g, &d).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("chromatic", n), &n, |b, _| {
            b.iter(|| decomposition_chromatic(&g, &d).unwrap())
        });
    }
    group.finish();
}

fn natural(c: &mut Criterion) {
    let h = build_h(4).unwrap();
    let d = natural_tree_decomposition_h(4).unwrap().decomposition;
    c.bench_function("natural_tree_chromatic/4", |b| b.iter(|| decomposition_chromatic(&h, &d).unwrap()));
}

fn pchr(c: &mut Criterion) {
    let mut group = c.benchmark_group("pchr_exact");
    for n in [5, 6] {
        let s = build_shift(n).unwrap();
        group.bench_with_input(BenchmarkId::new("shift", n), &n, |b, _| b.iter(|| pchr_exact(&s).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, build, geometric, natural, pchr);
criterion_main!(benches);
