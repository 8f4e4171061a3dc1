use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monogamy_bench::{chain_vector, coeffs, haar_state};
use monogamy_core::bounds::{monogamy_rhs_thm1, polygamy_rhs_thm2};
use monogamy_core::measures::{concurrence_wootters, teoa_oracle};
use monogamy_core::qstate::partial_trace;
use monogamy_core::EoaConfig;

fn wootters(c: &mut Criterion) {
    let rho = haar_state(3, 1).reduce(&[0, 1]).unwrap();
    c.bench_function("concurrence_wootters", |b| b.iter(|| concurrence_wootters(black_box(&rho)).unwrap()));
}

fn traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("partial_trace");
    for n in [3usize, 6, 10] {
        let state = haar_state(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &state, |b, s| {
            b.iter(|| partial_trace(black_box(s), n, &[0, n - 1]).unwrap())
        });
    }
    group.finish();
}

fn rhs(c: &mut Criterion) {
    let p = coeffs();
    let mut group = c.benchmark_group("bound_rhs");
    for n in [4usize, 16, 256] {
        let v = chain_vector(n);
        group.bench_with_input(BenchmarkId::new("monogamy", n), &v, |b, v| {
            b.iter(|| monogamy_rhs_thm1(black_box(v), 3.0, &p).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("polygamy", n), &v, |b, v| {
            b.iter(|| polygamy_rhs_thm2(black_box(v), 1.0, &p).unwrap())
        });
    }
    group.finish();
}

fn teoa(c: &mut Criterion) {
    let rho = haar_state(3, 3).reduce(&[0, 2]).unwrap();
    let config = EoaConfig { restarts: 2, max_iterations: 500, ..EoaConfig::default() };
    let mut group = c.benchmark_group("teoa_oracle");
    group.sample_size(10);
    group.bench_function("q2_two_restarts", |b| b.iter(|| teoa_oracle(black_box(&rho), 2.0, &config).unwrap()));
    group.finish();
}

criterion_group!(benches, wootters, traces, rhs, teoa);
criterion_main!(benches);
