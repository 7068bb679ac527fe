use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polycauchy::parallel::cauchy_batch;
use polycauchy::CauchyKind;
use polycauchy_identities::{catalog, run_cases, IdentityCase, Mode, ParameterGrid, RunOptions};

fn suite_modes(c: &mut Criterion) {
    let cases: Vec<&IdentityCase> = catalog().iter().filter(|c| c.group() != 21).collect();
    let grid = ParameterGrid::with_max_n(6);
    let mut group = c.benchmark_group("identity-suite");
    group.sample_size(10);
    for (name, mode) in [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| run_cases(&cases, &grid, RunOptions { mode, timing: false }).unwrap())
        });
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let specs: Vec<(CauchyKind, usize, usize)> = [CauchyKind::First, CauchyKind::Second]
        .into_iter()
        .flat_map(|kind| (0..=14).flat_map(move |n| (1..=4).map(move |k| (kind, n, k))))
        .collect();
    c.bench_function("cauchy-batch", |b| b.iter(|| cauchy_batch(&specs)));
}

criterion_group!(benches, suite_modes, batch);
criterion_main!(benches);
