use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use tenscat_core::homology::{ext_table, socle_multiplicities, OracleOptions};
use tenscat_core::linalg::{kernel, SparseVec};
use tenscat_core::quadratic::{build_algebra, hilbert_koszul_test, quadratic_dual, relation_space_from_oracle};
use tenscat_core::{Label, LieType, Partition};

fn algebras(c: &mut Criterion) {
    let mut group = c.benchmark_group("algebra");
    group.sample_size(10);
    for g in LieType::ALL {
        group.bench_function(format!("build {g} r=4"), |b| b.iter(|| build_algebra(black_box(g), 4).unwrap()));
    }
    let a = build_algebra(LieType::Sl, 4).unwrap();
    group.bench_function("dual sl r=4", |b| b.iter(|| quadratic_dual(black_box(&a)).unwrap()));
    group.bench_function("koszul sl r=4", |b| b.iter(|| hilbert_koszul_test(black_box(&a), 4).unwrap()));
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("relations o (4,0)", |b| {
        b.iter(|| relation_space_from_oracle(LieType::O, black_box((4, 0)), None).unwrap())
    });
    let opts = OracleOptions::default();
    let label = Label::Single(Partition::of(&[2, 1]));
    group.bench_function("socle sp [2,1]", |b| {
        b.iter(|| socle_multiplicities(LieType::Sp, black_box(&label), 2, &opts).unwrap())
    });
    group.bench_function("ext table sl size 2", |b| b.iter(|| ext_table(LieType::Sl, black_box(2), 1, &opts).unwrap()));
    group.finish();
}

/// Exact kernel of a banded integer matrix with a known one-dimensional kernel.
fn linalg(c: &mut Criterion) {
    let n = 120;
    let cols: Vec<SparseVec> = (0..n)
        .map(|j| {
            let mut entries = vec![(j, BigInt::from(j % 7 + 1))];
            if j + 1 < n {
                entries.push((j + 1, -BigInt::from(j % 5 + 2)));
            }
            SparseVec::from_pairs(entries)
        })
        .chain([SparseVec::unit(0)])
        .collect();
    c.bench_function("kernel 120x121 banded", |b| b.iter(|| kernel(black_box(&cols))));
}

criterion_group!(benches, algebras, oracle, linalg);
criterion_main!(benches);
