//! Throughput of the uniform samplers and of the Brownian excursion pipeline.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use noncross::geometry::{brownian_excursion, lamination_from_excursion};
use noncross::offspring::{mu, mu_c};
use noncross::samplers::{sample_gw_leaves, tuned_c, InternalDegrees, LeafConditioned, NoUnaryLeafTrees};
use noncross::{Model, ModelSampler, SampleBudget, SimRng};
use std::hint::black_box;

fn models(c: &mut Criterion) {
    let mut group = c.benchmark_group("model");
    group.sample_size(20);
    for model in [
        Model::Dissection,
        Model::Triangulation,
        Model::DissectionA("3,4".parse().unwrap()),
        Model::Nct,
        Model::PairPartition,
        Model::Partition,
        Model::NcGraph,
    ] {
        for n in [500, 2000] {
            let sampler = ModelSampler::new(model.clone(), n).unwrap();
            let mut rng = SimRng::new(1, 0);
            group.bench_with_input(BenchmarkId::new(model.name(), n), &n, |b, _| {
                b.iter(|| black_box(sampler.sample(&mut rng).unwrap()))
            });
        }
    }
    group.finish();
}

/// The same conditioned law through three samplers: the exact composition
/// sampler, the cycle-lemma sampler and plain rejection with a tuned parameter.
fn leaf_conditioned(c: &mut Criterion) {
    let n = 300;
    let mut group = c.benchmark_group("leaves-300");
    group.sample_size(20);
    let composition = NoUnaryLeafTrees::new(n, InternalDegrees::AtLeastTwo).unwrap();
    let cycle = LeafConditioned::new(mu(), n).unwrap();
    let tuned = mu_c(tuned_c(n)).unwrap();
    let mut rng = SimRng::new(2, 0);
    group.bench_function("composition", |b| b.iter(|| black_box(composition.sample(&mut rng))));
    group.bench_function("cycle-lemma", |b| {
        b.iter(|| black_box(cycle.sample(&mut rng, SampleBudget::default()).unwrap()))
    });
    group.bench_function("rejection", |b| {
        b.iter(|| black_box(sample_gw_leaves(&tuned, n, &mut rng, SampleBudget::default()).unwrap()))
    });
    group.finish();
}

fn excursions(c: &mut Criterion) {
    let mut group = c.benchmark_group("excursion");
    group.sample_size(20);
    let mut rng = SimRng::new(3, 0);
    for grid in [1 << 10, 1 << 12] {
        group.bench_with_input(BenchmarkId::new("lamination", grid), &grid, |b, &grid| {
            b.iter(|| {
                let e = brownian_excursion(grid, &mut rng).unwrap();
                black_box(lamination_from_excursion(&e).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, models, leaf_conditioned, excursions);
criterion_main!(benches);
