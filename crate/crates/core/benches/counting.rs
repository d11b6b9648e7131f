use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use horn_enum::counter::{Counter, CounterConfig};
use horn_enum::{encode, oracle, Variant};

fn dpll(c: &mut Criterion) {
    let mut group = c.benchmark_group("dpll");
    group.sample_size(10);
    for n in [4usize, 5] {
        let cnf = encode(n, Variant::H).unwrap();
        let seq = Counter::new(CounterConfig::sequential());
        group.bench_with_input(BenchmarkId::new("sequential", n), &cnf, |b, cnf| {
            b.iter(|| seq.count(black_box(cnf)).unwrap())
        });
        let par = Counter::new(CounterConfig::default());
        group.bench_with_input(BenchmarkId::new("parallel", n), &cnf, |b, cnf| {
            b.iter(|| par.count(black_box(cnf)).unwrap())
        });
    }
    group.finish();
}

fn components(c: &mut Criterion) {
    let mut group = c.benchmark_group("components");
    group.sample_size(10);
    let cnf = encode(5, Variant::H1).unwrap();
    for (name, cfg) in [
        ("sequential", CounterConfig::sequential().with_components()),
        ("parallel", CounterConfig::default().with_components()),
    ] {
        let counter = Counter::new(cfg);
        group.bench_function(name, |b| b.iter(|| counter.count(black_box(&cnf)).unwrap()));
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for (name, threads) in [("sequential", 1), ("parallel", 0)] {
        group.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| oracle::brute_count_with(black_box(4), Variant::H01, threads).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, dpll, components, brute_force);
criterion_main!(benches);
