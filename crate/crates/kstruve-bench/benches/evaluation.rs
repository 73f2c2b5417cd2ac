use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use kstruve::identities::{ode_residual, rec3_residual};
use kstruve::numerics::{integrate_unit_interval_with_distance, oracle_struve_sum, QuadratureConfig};
use kstruve::special::k_gamma;
use kstruve::struve::{modified_struve, normalized_struve, struve, StruveParams};

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    let params = StruveParams::new(0.7, 1.3, -1.0).unwrap();
    group.bench_function("struve_modified_x2", |b| {
        b.iter(|| struve(black_box(&params), black_box(2.0)).unwrap().value)
    });
    // Alternating at large x: exercises the double-double fallback.
    let alt = StruveParams::new(0.0, 1.0, 1.0).unwrap();
    group.bench_function("struve_alternating_x14", |b| {
        b.iter(|| struve(black_box(&alt), black_box(14.0)).unwrap().value)
    });
    group.bench_function("normalized_x5", |b| {
        b.iter(|| normalized_struve(black_box(0.5), 2.0, 5.0).unwrap().value)
    });
    group.bench_function("modified_x1", |b| {
        b.iter(|| modified_struve(black_box(0.0), 1.0, 1.0).unwrap().value)
    });
    group.bench_function("oracle_60_terms", |b| {
        b.iter(|| oracle_struve_sum(black_box(&alt), 2.0, 60).unwrap().value_f64())
    });
    group.finish();
}

fn bench_special(c: &mut Criterion) {
    c.bench_function("k_gamma", |b| {
        b.iter(|| k_gamma(black_box(3.7), black_box(1.5)).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    let quad = QuadratureConfig::default();
    c.bench_function("tanh_sinh_singular_envelope", |b| {
        b.iter(|| {
            integrate_unit_interval_with_distance(
                |t, omt| (omt * (2.0 - omt)).powf(-0.4) * (black_box(3.0) * t).sin(),
                &quad,
            )
            .unwrap()
            .value
        })
    });
}

fn bench_residuals(c: &mut Criterion) {
    let params = StruveParams::new(1.0, 2.0, -1.0).unwrap();
    c.bench_function("ode_residual", |b| {
        b.iter(|| ode_residual(black_box(&params), 2.0).unwrap().relative_residual)
    });
    c.bench_function("rec3_residual", |b| {
        b.iter(|| rec3_residual(black_box(&params), 2.0).unwrap().relative_residual)
    });
}

criterion_group!(
    benches,
    bench_series,
    bench_special,
    bench_quadrature,
    bench_residuals
);
criterion_main!(benches);
