//! Parallel vs sequential enumeration benchmarks. The two paths must agree
//! exactly (the partition reduction is deterministic); this compares their
//! throughput on the workloads that dominate real usage: codeword
//! enumeration, subset rank-size statistics, and subcode support scans.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mrc_core::matroid::Matroid;
use mrc_core::{construct_mrc, FieldSpec, MrcParams};

fn bench_weight_enumeration(c: &mut Criterion) {
    let params = MrcParams::data_local(6, 3, 2).unwrap();
    let spec = FieldSpec::new(16).unwrap();
    let inst = construct_mrc(&params, &spec, 1, 10_000).expect("instance");
    let code = inst.code;

    let mut group = c.benchmark_group("weight_distribution_16^6");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(code.enumerate_weight_distribution().unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(code.enumerate_weight_distribution_seq().unwrap()))
    });
    group.finish();
}

fn bench_rank_size(c: &mut Criterion) {
    let params = MrcParams::data_local(9, 3, 1).unwrap();
    let matroid = Matroid::mrc(params);

    let mut group = c.benchmark_group("rank_size_2^13");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(matroid.rank_size_distribution().unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(matroid.rank_size_distribution_seq().unwrap()))
    });
    group.finish();
}

fn bench_support_weights(c: &mut Criterion) {
    let params = MrcParams::data_local(4, 2, 1).unwrap();
    let spec = FieldSpec::new(8).unwrap();
    let inst = construct_mrc(&params, &spec, 1, 10_000).expect("instance");
    let code = inst.code;

    let mut group = c.benchmark_group("support_weights_s2_8^4");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(code.enumerate_support_weight_distribution(2).unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(code.enumerate_support_weight_distribution_seq(2).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_weight_enumeration,
    bench_rank_size,
    bench_support_weights
);
criterion_main!(benches);
