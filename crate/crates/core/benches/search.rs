use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pencil_cert::exactmath::PrimeField;
use pencil_cert::fixtures;
use pencil_cert::localcert::{scan_chart, search_smooth_points, SearchConfig};
use pencil_cert::reduction::{singular_locus_with, LocusMethod};
use pencil_cert::Execution;

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn chart_scan(c: &mut Criterion) {
    let pencil = fixtures::reference_pencil();
    let chart = fixtures::witness_chart();
    let mut group = c.benchmark_group("chart_scan");
    group.sample_size(10);
    for p in [3u64, 5] {
        let field = PrimeField::new(p).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, p), &field, |b, f| {
                b.iter(|| black_box(scan_chart(&pencil, &chart, f, exec)))
            });
        }
    }
    group.finish();
}

fn sampled_search(c: &mut Criterion) {
    let pencil = fixtures::reference_pencil();
    let field = PrimeField::new(11).unwrap();
    let mut group = c.benchmark_group("sampled_search_p11");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = SearchConfig { budget: 20_000, execution: exec, ..SearchConfig::default() };
        group.bench_function(name, |b| b.iter(|| black_box(search_smooth_points(&pencil, &field, &cfg))));
    }
    group.finish();
}

fn projective_scan(c: &mut Criterion) {
    let pencil = fixtures::reference_pencil();
    let mut group = c.benchmark_group("singular_locus_exhaustive");
    group.sample_size(10);
    for p in [7u64, 13] {
        let field = PrimeField::new(p).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, p), &field, |b, f| {
                b.iter(|| black_box(singular_locus_with(&pencil, f, LocusMethod::Exhaustive, exec)))
            });
        }
    }
    group.finish();
}

fn kernel_guided(c: &mut Criterion) {
    let pencil = fixtures::reference_pencil();
    let field = PrimeField::new(fixtures::LARGE_BAD_PRIME).unwrap();
    c.bench_function("singular_locus_kernel_guided", |b| {
        b.iter(|| black_box(singular_locus_with(&pencil, &field, LocusMethod::KernelGuided, Execution::Sequential)))
    });
}

criterion_group!(benches, chart_scan, sampled_search, projective_scan, kernel_guided);
criterion_main!(benches);
