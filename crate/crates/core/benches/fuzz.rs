use bessel_core::harness::{fuzz_with, tightness_compare_with, Ensemble, Execution, FuzzConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn fuzz(c: &mut Criterion) {
    let mut group = c.benchmark_group("fuzz");
    group.sample_size(10);
    for instances in [1_000u64, 10_000] {
        let cfg = FuzzConfig { master_seed: 1, instances, ..FuzzConfig::default() };
        group.throughput(Throughput::Elements(instances));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, instances), &cfg, |b, cfg| {
                b.iter(|| black_box(fuzz_with(cfg, exec)))
            });
        }
    }
    group.finish();
}

fn compare(c: &mut Criterion) {
    let mut group = c.benchmark_group("tightness_compare");
    group.sample_size(10);
    let cfg = FuzzConfig { master_seed: 1, instances: 5_000, ..FuzzConfig::default() };
    group.throughput(Throughput::Elements(cfg.instances));
    for ensemble in [Ensemble::Generic, Ensemble::Disk] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{ensemble:?}")), &cfg, |b, cfg| {
                b.iter(|| black_box(tightness_compare_with(cfg, ensemble, exec)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, fuzz, compare);
criterion_main!(benches);
