use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use littlegroup::contraction::contraction_report_with;
use littlegroup::exec::Execution;
use littlegroup::grid::{norm2_with, sample_grid_with, second_moments};
use littlegroup::lie_core::Rapidity;
use littlegroup::oscillator::{amplitude, sampled_residual, six_sigma_window};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn grid_400(exec: Execution) -> littlegroup::grid::Grid2D {
    let eta = Rapidity(1.0);
    sample_grid_with(
        exec,
        move |z, t| amplitude(eta, z, t),
        &six_sigma_window(eta),
        (400, 400),
    )
    .expect("valid window")
}

fn sampling(c: &mut Criterion) {
    let mut g = c.benchmark_group("sample_grid_400");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(grid_400(exec)))
        });
    }
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let grid = grid_400(Execution::Sequential);
    let mut g = c.benchmark_group("quadrature_400");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("norm2", name), |b| {
            b.iter(|| black_box(norm2_with(exec, &grid)))
        });
        g.bench_function(BenchmarkId::new("second_moments", name), |b| {
            b.iter(|| black_box(second_moments(exec, &grid)))
        });
    }
    g.finish();
}

fn residual(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariant_residual_h0.01");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(sampled_residual(exec, Rapidity(1.0), 4.0, 0.01).unwrap()))
        });
    }
    g.finish();
}

fn contraction(c: &mut Criterion) {
    let etas: Vec<f64> = (1..=120).map(|k| 0.1 * k as f64).collect();
    let mut g = c.benchmark_group("contraction_report_120");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(contraction_report_with(exec, &etas).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, sampling, quadrature, residual, contraction);
criterion_main!(benches);
