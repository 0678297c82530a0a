//! Throughput of the amplitude kernels and the full Grover loop, comparing
//! the sequential kernels against the rayon forms (when the `parallel`
//! feature is on). Run with
//!
//!   cargo bench -p groveq
//!   cargo bench -p groveq --no-default-features
//!
//! to compare the dispatched path with and without rayon.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use groveq::gates::hadamard_all;
use groveq::grover::run_grover;
use groveq::kernels;
use groveq::oracle::{EquationProblem, Oracle};
use groveq::statevector::StateVector;

fn uniform_amps(n: usize) -> Vec<Complex64> {
    let len = 1usize << n;
    vec![Complex64::new(1.0 / (len as f64).sqrt(), 0.0); len]
}

fn bench_hadamard(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard");
    for n in [14usize, 18, 20] {
        let amps = uniform_amps(n);
        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, _| {
            let mut a = amps.clone();
            b.iter(|| kernels::hadamard_seq(&mut a, n / 2));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, _| {
            let mut a = amps.clone();
            b.iter(|| kernels::hadamard_par(&mut a, n / 2));
        });
    }
    group.finish();
}

fn bench_diffusion(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert_about_mean");
    for n in [14usize, 18, 20] {
        let amps = uniform_amps(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            let mut a = amps.clone();
            b.iter(|| kernels::invert_about_mean(&mut a));
        });
    }
    group.finish();
}

fn bench_add_const(c: &mut Criterion) {
    let mut group = c.benchmark_group("add_const");
    for n in [14usize, 18, 20] {
        let amps = uniform_amps(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            let mut a = amps.clone();
            b.iter(|| kernels::add_const(&mut a, 12345 & ((1 << n) - 1), 0, n));
        });
    }
    group.finish();
}

fn bench_full_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_grover");
    group.sample_size(10);
    for n in [10usize, 14, 16] {
        let modulus = 1u64 << n;
        let problem = EquationProblem::new(n, 77 % modulus, 123 % modulus).unwrap();
        let oracle = Oracle::for_equation(problem);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| run_grover(n, &oracle, 1, None).unwrap());
        });
    }
    group.finish();
}

fn bench_superposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard_all");
    for n in [16usize, 20] {
        let gates = hadamard_all(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| {
                let mut s = StateVector::zero_state(n).unwrap();
                s.apply_all(&gates).unwrap();
                s
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_hadamard,
    bench_diffusion,
    bench_add_const,
    bench_full_run,
    bench_superposition
);
criterion_main!(benches);
