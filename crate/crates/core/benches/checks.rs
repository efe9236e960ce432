use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lralg::catalog;
use lralg::construct::{half_bracket, two_generator_lr};
use lralg::lie::validate_lie_with;
use lralg::linalg::unit_vector;
use lralg::lr::{check_lr_with, check_operator_identities_with, sample_triples};
use lralg::{Execution, LieAlgebra, Product};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn inputs() -> Vec<(String, LieAlgebra, Product)> {
    let f12 = catalog::filiform(12).unwrap();
    let p12 = two_generator_lr(&f12, &unit_vector(12, 0), &unit_vector(12, 1)).unwrap();
    let free = catalog::free_two_step(4).unwrap();
    let half = half_bracket(&free).unwrap();
    vec![
        ("filiform12".into(), f12, p12),
        ("free-two-step4".into(), free, half),
    ]
}

fn bench_validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate_lie");
    for (name, g, _) in inputs() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, &name), &g, |b, g| {
                b.iter(|| validate_lie_with(g, exec))
            });
        }
    }
    group.finish();
}

fn bench_check_lr(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_lr");
    for (name, g, p) in inputs() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, &name), &(&g, &p), |b, (g, p)| {
                b.iter(|| check_lr_with(g, p, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_operator_identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator_identities");
    group.sample_size(10);
    for (name, _, p) in inputs() {
        let samples = sample_triples(p.dim(), 100, 7);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, &name), &p, |b, p| {
                b.iter(|| check_operator_identities_with(p, &samples, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_validate,
    bench_check_lr,
    bench_operator_identities
);
criterion_main!(benches);
