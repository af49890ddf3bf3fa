use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use helly_bench::{complete_intersection, complex, maximal_power, squarefree, Q};
use helly_core::betti::{
    betti_squarefree_hochster, betti_table_koszul, eliahou_kervaire_complex, regularity,
    verify_free_complex_is_resolution,
};
use helly_core::generate::m_power;
use helly_core::{is_leray, reduced_homology_dims};

fn koszul(c: &mut Criterion) {
    let mut g = c.benchmark_group("koszul");
    for (r, d) in [(2, 2), (3, 1), (3, 2)] {
        let i = maximal_power(r, d);
        g.bench_with_input(BenchmarkId::new("maximal_power", format!("{r}x{d}")), &i, |b, i| {
            b.iter(|| betti_table_koszul(black_box(i), None).unwrap())
        });
    }
    let ci = complete_intersection();
    g.bench_function("complete_intersection_regularity", |b| {
        b.iter(|| regularity(&betti_table_koszul(black_box(&ci), None).unwrap()).unwrap())
    });
    g.finish();
}

fn hochster(c: &mut Criterion) {
    let mut g = c.benchmark_group("hochster");
    for n in [5, 6, 7] {
        let i = squarefree(n as u64, n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &i, |b, i| {
            b.iter(|| betti_squarefree_hochster(black_box(i), Q).unwrap())
        });
    }
    g.finish();
}

fn simplicial(c: &mut Criterion) {
    let mut g = c.benchmark_group("simplicial");
    for n in [6, 8, 10] {
        let cx = complex(n as u64, n);
        g.bench_with_input(BenchmarkId::new("homology", n), &cx, |b, cx| {
            b.iter(|| reduced_homology_dims(black_box(cx), Q).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("is_leray", n), &cx, |b, cx| {
            b.iter(|| is_leray(black_box(cx), 1, Q).unwrap())
        });
    }
    g.finish();
}

fn eliahou_kervaire(c: &mut Criterion) {
    let mut g = c.benchmark_group("eliahou_kervaire");
    for (r, d) in [(3, 2), (4, 3)] {
        g.bench_function(BenchmarkId::new("build", format!("{r}x{d}")), |b| {
            b.iter(|| eliahou_kervaire_complex(black_box(r), d, Q).unwrap())
        });
    }
    let f = eliahou_kervaire_complex(3, 2, Q).unwrap();
    let m = helly_core::MultigradedIdeal::from_monomial(&m_power(3, 2), Q);
    g.bench_function("verify_3x2", |b| {
        b.iter(|| verify_free_complex_is_resolution(black_box(&f), &m, 6).unwrap())
    });
    g.finish();
}

criterion_group!(benches, koszul, hochster, simplicial, eliahou_kervaire);
criterion_main!(benches);
