use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zed_bench::{reduced_seq, reduced_set, seq_pair, set_pair};
use zed_core::seq::{lcs, zed_seq_exact};
use zed_core::set::{algorithm3_special, algorithm4_fpt, zed_set_exact};

fn bench_lcs(c: &mut Criterion) {
    let mut group = c.benchmark_group("lcs");
    for len in [500, 2000, 5000] {
        let (a, b) = seq_pair(1, len, 100);
        group.bench_with_input(BenchmarkId::from_parameter(len), &len, |bch, _| {
            bch.iter(|| lcs(black_box(&a), black_box(&b)))
        });
    }
    group.finish();
}

fn bench_matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching");
    for k in [50, 100, 200] {
        let (g1, g2) = set_pair(2, 10 * k as u32, k, true);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |bch, _| {
            bch.iter(|| algorithm3_special(black_box(&g1), black_box(&g2)).unwrap())
        });
    }
    group.finish();
}

fn bench_fpt(c: &mut Criterion) {
    let mut group = c.benchmark_group("fpt");
    for k in [4, 6, 8] {
        let (g1, g2) = set_pair(3, 3 * k as u32, k, false);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |bch, _| {
            bch.iter(|| algorithm4_fpt(black_box(&g1), black_box(&g2)).unwrap())
        });
    }
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for m in [2, 4] {
        let (g1, g2) = reduced_seq(4, 4, m);
        group.bench_with_input(BenchmarkId::new("seq", m), &m, |bch, _| {
            bch.iter(|| zed_seq_exact(black_box(&g1), black_box(&g2)).unwrap())
        });
        let (s1, s2) = reduced_set(5, 4, m);
        group.bench_with_input(BenchmarkId::new("set", m), &m, |bch, _| {
            bch.iter(|| zed_set_exact(black_box(&s1), black_box(&s2)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_lcs, bench_matching, bench_fpt, bench_exact);
criterion_main!(benches);
