use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qsym::algebra::clear_shuffle_cache;
use qsym::schur::basis_matrix;
use qsym::*;

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

fn quasi_shuffles(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("quasi_shuffle");
    for (a, b) in [("1,3,2", "2"), ("1,2,1,2", "2,1,1"), ("1,1,2,1,1", "3,1,2")] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{a}*{b}")),
            &(c(a), c(b)),
            |bch, (a, b)| {
                bch.iter(|| {
                    clear_shuffle_cache();
                    black_box(quasi_shuffle(a, b))
                })
            },
        );
    }
    g.finish();
}

fn schur_expansion(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("schur_to_m");
    for n in [4usize, 6, 7] {
        let comps = compositions_of(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &comps, |bch, comps| {
            bch.iter(|| {
                for a in comps {
                    let mut count = 0usize;
                    qsym::schur::for_each_ssrct(
                        &SkewReverseShape::straight(a.clone()),
                        n as u32,
                        |_| count += 1,
                    );
                    black_box(count);
                }
            })
        });
    }
    g.finish();
}

fn basis_matrices(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("basis_matrix_inverse");
    g.sample_size(10);
    for n in [5usize, 7] {
        let m = basis_matrix(n).unwrap().matrix().clone();
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |bch, m| {
            bch.iter(|| black_box(m.inverse()))
        });
    }
    g.finish();
}

fn down_set_pairs(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("equal_down_set_pairs");
    g.sample_size(10);
    for order in OrderTag::ALL {
        g.bench_with_input(BenchmarkId::new(order.to_string(), 9), &order, |bch, &o| {
            bch.iter(|| black_box(equal_down_set_pairs(o, 9)))
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    quasi_shuffles,
    schur_expansion,
    basis_matrices,
    down_set_pairs
);
criterion_main!(benches);
