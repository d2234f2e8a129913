use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use egc_bench::{flag, j_inputs, partition, point};
use egc_core::edelman_greene::pi_algorithm;
use egc_core::grothendieck::g_eval;
use egc_core::tableaux::enumerate;
use egc_core::{j_coefficient, EnumSpec, Sign, SkewShape};

fn bench_j(c: &mut Criterion) {
    let mut g = c.benchmark_group("j_coefficient");
    for (name, lambda, phi, rho) in j_inputs() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &(lambda, phi, rho), |b, (l, f, r)| {
            b.iter(|| j_coefficient(black_box(l), black_box(f), black_box(r)).unwrap())
        });
    }
    g.finish();
}

fn bench_g_eval(c: &mut Criterion) {
    let pt = point();
    let mut g = c.benchmark_group("g_eval");
    for n in [2usize, 3, 4] {
        let lambda = partition(&vec![n; n.min(4)]);
        let phi = flag(&(0..lambda.len() as i64).map(|i| i - 1).collect::<Vec<_>>());
        let shape = SkewShape::straight(lambda);
        g.bench_with_input(BenchmarkId::from_parameter(n), &(shape, phi), |b, (s, f)| {
            b.iter(|| g_eval(black_box(s), Some(f), Sign::Any, &pt, None).unwrap())
        });
    }
    g.finish();
}

fn bench_pi(c: &mut Criterion) {
    let lambda = partition(&[4, 4, 4, 4, 4, 2, 1]);
    let phi = flag(&[3, 4, 4, 5, 6, 6, 8]);
    c.bench_function("pi_algorithm", |b| b.iter(|| pi_algorithm(black_box(&lambda), black_box(&phi)).unwrap()));
}

fn bench_enumerate(c: &mut Criterion) {
    let spec = EnumSpec::new(SkewShape::straight(partition(&[3, 2])), Some(flag(&[1, 2])), Sign::Any, (-2, 2))
        .unwrap();
    c.bench_function("enumerate_3_2", |b| b.iter(|| enumerate(black_box(&spec)).unwrap().count()));
}

criterion_group!(benches, bench_j, bench_g_eval, bench_pi, bench_enumerate);
criterion_main!(benches);
