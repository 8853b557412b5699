use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use parknot::{
    build_m, nprime_invariant, parity, parse_surface_file, s_invariant, verify_invariance, VerifyConfig, Which,
};
use parknot_bench::{gauss_codes, surfaces, TORUS};
use std::hint::black_box;

fn torus_pair(c: &mut Criterion) {
    let ds: Vec<_> = parse_surface_file(TORUS).into_iter().map(Result::unwrap).collect();
    c.bench_function("s/torus fixtures", |b| {
        b.iter(|| ds.iter().map(|d| s_invariant(black_box(d))).collect::<Vec<_>>())
    });
}

fn s_by_size(c: &mut Criterion) {
    let mut g = c.benchmark_group("s/random genus 2");
    for n in [4, 8, 12, 16] {
        let ds = surfaces(8, n, 2, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &ds, |b, ds| {
            b.iter(|| ds.iter().map(|d| s_invariant(black_box(d))).collect::<Vec<_>>())
        });
    }
    g.finish();
}

fn det_only(c: &mut Criterion) {
    let mut g = c.benchmark_group("det/M genus 1");
    for n in [8, 16] {
        let ms: Vec<_> = surfaces(4, n, 1, 99).iter().map(|d| build_m(d, &parity(d))).collect();
        g.bench_with_input(BenchmarkId::from_parameter(n), &ms, |b, ms| {
            b.iter(|| ms.iter().map(|m| m.det().unwrap()).collect::<Vec<_>>())
        });
    }
    g.finish();
}

fn nprime_by_size(c: &mut Criterion) {
    let mut g = c.benchmark_group("n'/random");
    for n in [4, 8, 12, 16] {
        let ds = gauss_codes(8, n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &ds, |b, ds| {
            b.iter(|| ds.iter().map(|d| nprime_invariant(black_box(d))).collect::<Vec<_>>())
        });
    }
    g.finish();
}

fn verify_small(c: &mut Criterion) {
    let cfg = VerifyConfig { trials: 20, max_crossings: 6, max_genus: 1, seed: 1, which: Which::Both, insertions: 1 };
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("20 trials", |b| b.iter(|| verify_invariance(black_box(&cfg))));
    g.finish();
}

criterion_group!(benches, torus_pair, s_by_size, det_only, nprime_by_size, verify_small);
criterion_main!(benches);
