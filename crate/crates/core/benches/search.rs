use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tep_core::completeness::{
    coverage_deg2, coverage_deg3, enumerate_ideal_deg3, search_triads, Equivalence,
};
use tep_core::Exec;

fn executors() -> [(&'static str, Exec); 2] {
    [
        ("sequential", Exec::sequential()),
        ("parallel", Exec::with_jobs(0)),
    ]
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (name, exec) in executors() {
        group.bench_with_input(
            BenchmarkId::new("coverage_deg2_h40", name),
            &exec,
            |b, e| b.iter(|| coverage_deg2(40, *e)),
        );
        group.bench_with_input(
            BenchmarkId::new("enumerate_deg3_h24", name),
            &exec,
            |b, e| b.iter(|| enumerate_ideal_deg3(24, *e)),
        );
        group.bench_with_input(
            BenchmarkId::new("coverage_deg3_h10_b6", name),
            &exec,
            |b, e| b.iter(|| coverage_deg3(10, 6, Equivalence::Scalar, *e)),
        );
        group.bench_with_input(BenchmarkId::new("triads_h60", name), &exec, |b, e| {
            b.iter(|| search_triads(60, *e))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_search);
criterion_main!(benches);
