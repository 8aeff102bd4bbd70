//! Sequential against rayon-parallel enumeration and census.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use quiddity::classify::{census, enumerate_quiddities};
use quiddity::numfield::rational::ratio;
use quiddity::numfield::{ComplexInterval, FieldElement, NumberField, QPoly};
use quiddity::par::Execution;

fn generators() -> Vec<(&'static str, FieldElement)> {
    let sqrt2 = NumberField::make(&QPoly::from_i64s(&[-2, 0, 1]), &ComplexInterval::real(ratio(1, 1), ratio(2, 1)), false)
        .unwrap()
        .alpha();
    vec![("Z", NumberField::rationals().one()), ("sqrt2", sqrt2)]
}

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n7_k2");
    group.sample_size(10);
    for (name, w) in generators() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &w, |b, w| {
                b.iter(|| enumerate_quiddities(w, 7, 2, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_n7_k2");
    group.sample_size(10);
    for (name, w) in generators() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &w, |b, w| b.iter(|| census(w, 7, 2, exec).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_census);
criterion_main!(benches);
