use std::hint::black_box;
use std::thread::available_parallelism;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use irredundant::catalog::{mathieu, shipped_certificates};
use irredundant::genset::deleted_subset_report;
use irredundant::par::with_workers;
use irredundant::search::{dihedral_orders, scan, SearchConfig};
use irredundant::ENUMERATION_CAP;

fn threads() -> usize {
    available_parallelism().map_or(2, |n| n.get()).max(2)
}

fn m11_scan(c: &mut Criterion) {
    let m11 = mathieu(11).unwrap();
    let mut group = c.benchmark_group("scan_m11_size5");
    group.sample_size(10);
    for (label, workers) in [("sequential", 1), ("parallel", threads())] {
        let mut cfg = SearchConfig::new("M11", 5);
        cfg.workers = workers;
        cfg.progress_every = 0;
        group.bench_with_input(BenchmarkId::from_parameter(label), &cfg, |b, cfg| {
            b.iter(|| with_workers(workers, || scan(black_box(&m11), cfg).unwrap()))
        });
    }
    group.finish();
}

fn m11_dihedral(c: &mut Criterion) {
    let m11 = mathieu(11).unwrap();
    let mut group = c.benchmark_group("dihedral_orders_m11");
    group.sample_size(10);
    for (label, workers) in [("sequential", 1), ("parallel", threads())] {
        group.bench_function(label, |b| {
            b.iter(|| with_workers(workers, || dihedral_orders(black_box(&m11), ENUMERATION_CAP).unwrap()))
        });
    }
    group.finish();
}

fn m12_deleted(c: &mut Criterion) {
    let seq = shipped_certificates()[1].sequence().unwrap();
    let mut group = c.benchmark_group("deleted_subsets_m12");
    group.sample_size(10);
    for (label, workers) in [("sequential", 1), ("parallel", threads())] {
        group.bench_function(label, |b| {
            b.iter(|| with_workers(workers, || deleted_subset_report(black_box(&seq), false)))
        });
    }
    group.finish();
}

criterion_group!(benches, m11_scan, m11_dihedral, m12_deleted);
criterion_main!(benches);
