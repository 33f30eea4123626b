use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fsemi::automata::{ds_sync_word, monoid_of_maps, shortest_sync_word};
use fsemi::corpus;
use fsemi::marked::is_unambiguous;
use fsemi::radical::{rhodes_radical, rhodes_radical_oracle};
use fsemi::rep::{triangularize, TriangularMode};
use fsemi::semigroup::DEFAULT_CAP;
use fsemi::FieldSpec;
use fsemi_bench::{cerny_automaton, repeated_marks, staircase};

fn radical(c: &mut Criterion) {
    let fields: Vec<FieldSpec> = ["Q", "F2", "F3"].iter().map(|k| k.parse().unwrap()).collect();
    let mut group = c.benchmark_group("radical");
    for (name, s) in corpus::curated() {
        group.bench_with_input(BenchmarkId::new("ggm_meet", name), &s, |b, s| {
            b.iter(|| fields.iter().map(|k| rhodes_radical(s, k).congruence.class_count()).sum::<usize>())
        });
    }
    let b2 = corpus::b2_1();
    group.bench_function("oracle/B2^1", |b| b.iter(|| rhodes_radical_oracle(&b2, &fields[0]).unwrap()));
    group.finish();
}

fn triangularization(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangularize");
    for (name, s, field) in [
        ("T2/Q", corpus::t2(), "Q"),
        ("Z6/C", corpus::cyclic(6), "C"),
        ("Z3/F4", corpus::cyclic(3), "F4"),
        ("U1/F2", corpus::u1(), "F2"),
    ] {
        let k: FieldSpec = field.parse().unwrap();
        group.bench_function(name, |b| b.iter(|| triangularize(&s, &k, TriangularMode::Triangular).unwrap()));
    }
    group.finish();
}

fn synchronization(c: &mut Criterion) {
    let mut group = c.benchmark_group("sync");
    for n in [4, 6, 8] {
        let maps = staircase(n);
        let plain: Vec<Vec<usize>> = maps.iter().map(|(_, m)| m.clone()).collect();
        group.bench_with_input(BenchmarkId::new("ds", n), &maps, |b, m| b.iter(|| ds_sync_word(m).unwrap()));
        group.bench_with_input(BenchmarkId::new("bfs", n), &plain, |b, m| {
            b.iter(|| shortest_sync_word(m, n).unwrap())
        });
    }
    for n in [4, 5, 6] {
        let maps = cerny_automaton(n);
        group.bench_with_input(BenchmarkId::new("cerny_monoid", n), &maps, |b, m| {
            b.iter(|| monoid_of_maps(m, DEFAULT_CAP).unwrap().semigroup().order())
        });
    }
    group.finish();
}

fn unambiguity(c: &mut Criterion) {
    let mut group = c.benchmark_group("unambiguity");
    for marks in [1, 2, 3] {
        let spec = repeated_marks(marks);
        group.bench_with_input(BenchmarkId::from_parameter(marks), &spec, |b, s| {
            b.iter(|| is_unambiguous(s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, radical, triangularization, synchronization, unambiguity);
criterion_main!(benches);
