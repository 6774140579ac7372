use std::hint::black_box;

use coadjoint::catalog;
use coadjoint::heisenberg_dual::DualSubset;
use coadjoint::invariants::index;
use coadjoint::stratification::{jump_set, stratify};
use coadjoint::Functional;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_stratify(c: &mut Criterion) {
    let mut group = c.benchmark_group("stratify_filiform_h1");
    group.sample_size(10);
    for m in [4, 6, 8] {
        let alg = catalog::filiform(m).unwrap().algebra;
        group.bench_with_input(BenchmarkId::from_parameter(m), &alg, |b, alg| {
            b.iter(|| stratify(black_box(alg), 1, 1).unwrap())
        });
    }
    group.finish();
}

fn bench_jump_set(c: &mut Criterion) {
    let mut group = c.benchmark_group("jump_set");
    for id in ["heisenberg:3", "filiform:8", "ut:5", "g_st:3/7,5/7"] {
        let alg = catalog::get(id).unwrap().algebra;
        let xi = Functional::from_ints(
            &(1..=alg.dim() as i64)
                .map(|k| 7 * k - 20)
                .collect::<Vec<_>>(),
        );
        group.bench_with_input(
            BenchmarkId::from_parameter(id),
            &(alg, xi),
            |b, (alg, xi)| b.iter(|| jump_set(black_box(alg), black_box(xi)).unwrap()),
        );
    }
    group.finish();
}

fn bench_index(c: &mut Criterion) {
    let alg = catalog::ut(5).unwrap().algebra;
    c.bench_function("index_ut5", |b| {
        b.iter(|| index(black_box(&alg), 1).unwrap())
    });
}

fn bench_quasi_compactness(c: &mut Criterion) {
    let a = DualSubset::from_json_str(
        r#"{"n":2,"part1":[{"lo":-1,"hi":0,"lo_closed":true},{"lo":0,"hi":1,"hi_closed":true}],
            "part2":[{"min":[0,0,0,0],"max":[1,1,1,1],"closed":true},
                     {"min":["1/2",0,0,0],"max":[2,1,1,"3/2"],"closed":false}]}"#,
    )
    .unwrap();
    let b2 = a.r_act(&coadjoint::rational::ratio(3, 2));
    c.bench_function("qc_decide", |b| {
        b.iter(|| black_box(&a).quasi_compactness())
    });
    c.bench_function("closure_intersect", |b| {
        b.iter(|| black_box(&a).intersect(black_box(&b2)).unwrap().closure())
    });
    c.bench_function("complement_n2", |b| b.iter(|| black_box(&a).complement()));
}

criterion_group!(
    benches,
    bench_stratify,
    bench_jump_set,
    bench_index,
    bench_quasi_compactness
);
criterion_main!(benches);
