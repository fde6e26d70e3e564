use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hctree::corpus::corpus;
use hctree::families::{generate, Family};
use hctree::solver::{exact_hc, ExactConfig};
use hctree::{analyze, Tree};

fn workers() -> usize {
    std::thread::available_parallelism().map_or(4, |n| n.get()).max(2)
}

fn exact_threads(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_hc");
    group.sample_size(10);
    for family in [Family::ATree { d: 4 }, Family::Caterpillar { m: 4, d: 5 }] {
        let (tree, _) = generate(&family).unwrap();
        let rv = analyze(&tree);
        for threads in [1, workers()] {
            let cfg = ExactConfig { threads, ..ExactConfig::default() };
            group.bench_with_input(BenchmarkId::new(family.to_string(), threads), &cfg, |b, cfg| {
                b.iter(|| exact_hc(black_box(&rv), cfg).unwrap().hc)
            });
        }
    }
    group.finish();
}

fn corpus_sweep(c: &mut Criterion) {
    let trees: Vec<Tree> = corpus(4..=8, true);
    let solve = |t: &Tree| exact_hc(&analyze(t), &ExactConfig::default()).unwrap().hc;
    let mut group = c.benchmark_group("corpus_4_to_8");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| trees.iter().map(solve).collect::<Vec<_>>()));
    group.bench_function("sweep", |b| b.iter(|| hctree::par::sweep(black_box(&trees), solve)));
    group.finish();
}

criterion_group!(benches, exact_threads, corpus_sweep);
criterion_main!(benches);
