use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nonret_bench::doubled_cycle;
use nonret_core::atoms::binary_search;
use nonret_core::atoms::BinarySearchOptions;
use nonret_core::witness::witness;
use nonret_core::{closure, count_atoms, minimize, Transformation};

fn generators(n: usize) -> Vec<Transformation> {
    witness(n, "a,b,c,d,G")
        .unwrap()
        .dfa
        .letter_transformations()
        .into_iter()
        .map(|(_, t)| t)
        .collect()
}

fn semigroup(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(10);
    for n in [4, 5, 6] {
        let gens = generators(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &gens, |b, g| {
            b.iter(|| closure(black_box(g)).unwrap().len())
        });
    }
    group.finish();
}

fn minimization(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize");
    for n in [64, 512, 4096] {
        let dfa = doubled_cycle(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &dfa, |b, d| {
            b.iter(|| minimize(black_box(d)).states())
        });
    }
    group.finish();
}

fn atoms(c: &mut Criterion) {
    let mut group = c.benchmark_group("atoms");
    group.sample_size(10);
    for n in [6, 8, 10] {
        let dfa = witness(n, "a,b,c").unwrap().dfa;
        group.bench_with_input(BenchmarkId::from_parameter(n), &dfa, |b, d| {
            b.iter(|| count_atoms(black_box(d)).unwrap())
        });
    }
    group.bench_function("binary-exhaustive/4", |b| {
        b.iter(|| binary_search(BinarySearchOptions::new(4)).unwrap().max_atoms)
    });
    group.finish();
}

criterion_group!(benches, semigroup, minimization, atoms);
criterion_main!(benches);
