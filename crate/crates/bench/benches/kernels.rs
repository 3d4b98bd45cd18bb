use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mf4_core::elliptic::{count_points_prime, g_coefficients, CurveOverQ};
use mf4_core::hecke::hecke_apply;
use mf4_core::qseries::{self, QExpansion};
use mf4_core::squares;
use mf4_core::tower;

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    for prec in [512usize, 2048] {
        group.bench_with_input(BenchmarkId::new("delta", prec), &prec, |b, &prec| {
            b.iter(|| qseries::delta(black_box(prec)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("build_f", prec), &prec, |b, &prec| {
            b.iter(|| qseries::build_f(black_box(prec)).unwrap())
        });
    }
    let e4 = qseries::eisenstein_e4(2048).unwrap();
    group.bench_function("mul_2048", |b| {
        b.iter(|| qseries::mul(black_box(&e4), black_box(&e4)).unwrap())
    });
    group.finish();
}

fn bench_hecke(c: &mut Criterion) {
    let f: QExpansion = qseries::build_f(1200).unwrap();
    let mut group = c.benchmark_group("hecke");
    group.sample_size(10);
    group.bench_function("t2_on_f_1200", |b| {
        b.iter(|| hecke_apply(black_box(&f), 2).unwrap())
    });
    group.finish();
}

fn bench_counting(c: &mut Criterion) {
    let e = CurveOverQ::base_curve();
    let mut group = c.benchmark_group("counting");
    group.sample_size(10);
    group.bench_function("points_up_to_499", |b| {
        b.iter(|| {
            squares::odd_primes_up_to(499)
                .into_iter()
                .map(|ell| count_points_prime(ell, black_box(&e)).unwrap())
                .sum::<u64>()
        })
    });
    group.bench_function("g_coefficients_512", |b| {
        b.iter(|| g_coefficients(black_box(512)).unwrap())
    });
    group.finish();
}

fn bench_tower(c: &mut Criterion) {
    let (k, r, _) = tower::build_k();
    // a fixed element touching every basis coordinate
    let mut acc = k.one();
    for idx in 0..3 {
        let g = k.generator(idx);
        acc = acc
            .add(&g)
            .unwrap()
            .mul(&g.add(&k.integer(2)).unwrap())
            .unwrap();
    }
    let mut group = c.benchmark_group("tower");
    group.bench_function("mul", |b| {
        b.iter(|| black_box(&acc).mul(black_box(&acc)).unwrap())
    });
    group.bench_function("inv", |b| b.iter(|| black_box(&acc).inv().unwrap()));
    group.bench_function("automorphism_apply", |b| {
        b.iter(|| r.apply(black_box(&acc)).unwrap())
    });
    group.finish();
}

fn bench_squares(c: &mut Criterion) {
    let mut group = c.benchmark_group("squares");
    group.bench_function("r3_closed_sweep_500", |b| {
        b.iter(|| {
            (1..=500u64)
                .filter(|n| n % 4 == 1 || n % 4 == 3)
                .map(|n| squares::r3_closed(black_box(n)).unwrap())
                .sum::<u64>()
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_series,
    bench_hecke,
    bench_counting,
    bench_tower,
    bench_squares
);
criterion_main!(benches);
