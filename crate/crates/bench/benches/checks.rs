use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use omlkit_bench::{equation, model};
use omlkit_core::freeoml::{canonical_term, closure, product_table};
use omlkit_core::hilbert::check_equation_random;
use omlkit_core::model::check_equation;
use omlkit_core::{FreeElem, Mode, Term};

fn free_lattice(c: &mut Criterion) {
    c.bench_function("product_table", |b| b.iter(|| black_box(product_table())));
    c.bench_function("canonical_term_88", |b| {
        b.iter(|| black_box(canonical_term(black_box(88)).unwrap()))
    });
    let ops: Vec<Term> = (0..6)
        .map(|i| Term::parse(&format!("a =={i} b")).unwrap())
        .collect();
    let seeds = [FreeElem::A, FreeElem::B, FreeElem::ZERO, FreeElem::ONE];
    c.bench_function("closure_equivalences", |b| {
        b.iter(|| black_box(closure(&seeds, &ops).unwrap()))
    });
}

fn model_checks(c: &mut Criterion) {
    let free2 = model("free2");
    let woml20 = model("woml20");
    let eq4 = equation("EQ4");
    let eq6 = equation("EQ6");
    let mut g = c.benchmark_group("exhaustive");
    g.sample_size(10);
    g.bench_function("free2_eq4", |b| {
        b.iter(|| black_box(check_equation(&free2, &eq4, Mode::Exhaustive)))
    });
    g.bench_function("woml20_eq6", |b| {
        b.iter(|| black_box(check_equation(&woml20, &eq6, Mode::Exhaustive)))
    });
    g.finish();
}

fn subspaces(c: &mut Criterion) {
    let eq1 = equation("EQ1");
    let mut g = c.benchmark_group("hilbert");
    g.sample_size(10);
    g.bench_function("eq1_dim4_100", |b| {
        b.iter(|| black_box(check_equation_random(4, &eq1, 100, 3)))
    });
    g.finish();
}

criterion_group!(benches, free_lattice, model_checks, subspaces);
criterion_main!(benches);
