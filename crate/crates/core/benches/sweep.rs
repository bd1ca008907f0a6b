//! Sequential versus parallel primitive-vector sweeps and identity checks.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use std::time::Duration;
use superschur::par::Parallelism;
use superschur::superring::{check_det_identities, IdentityParams};
use superschur::sweep::run_sweep;

fn modes() -> Vec<(&'static str, Parallelism)> {
    let mut out = vec![("sequential", Parallelism::Sequential)];
    if Parallelism::available() {
        out.push(("parallel", Parallelism::Parallel));
    }
    out
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("primitive_sweep");
    for (m, n, size) in [(2, 2, 5), (2, 3, 5)] {
        for (label, mode) in modes() {
            group.bench_with_input(
                BenchmarkId::new(label, format!("({m},{n}) |λ|≤{size}")),
                &mode,
                |b, &mode| b.iter(|| black_box(run_sweep(m, n, size, true, mode))),
            );
        }
    }
    group.finish();
}

fn bench_identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_identities");
    for (label, mode) in modes() {
        let params = IdentityParams {
            mode,
            ..IdentityParams::default()
        };
        group.bench_function(BenchmarkId::new(label, "(4,3)"), |b| {
            b.iter(|| black_box(check_det_identities(4, 3, params).unwrap()))
        });
    }
    group.finish();
}

fn criterion_config() -> Criterion {
    Criterion::default()
        .warm_up_time(Duration::from_secs(1))
        .measurement_time(Duration::from_secs(5))
        .sample_size(10)
}

criterion_group!(
    name = benches;
    config = criterion_config();
    targets = bench_sweep, bench_identities
);
criterion_main!(benches);
