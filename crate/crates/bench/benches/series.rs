use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hgf_bench::{perturbed_3f2, terminating_3f2};
use hgf_core::field::Rational;
use hgf_core::series::pochhammer;

fn eval(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_terminating");
    for n in [4u64, 16, 64] {
        let s = terminating_3f2(n);
        g.bench_with_input(BenchmarkId::new("rational", n), &s, |b, s| b.iter(|| black_box(s).eval_terminating()));
        let s = perturbed_3f2(n);
        g.bench_with_input(BenchmarkId::new("ratfun", n), &s, |b, s| b.iter(|| black_box(s).eval_terminating()));
    }
    g.finish();
}

fn reverse(c: &mut Criterion) {
    let s = terminating_3f2(16);
    c.bench_function("reverse_16", |b| b.iter(|| black_box(&s).reverse()));
}

fn rising(c: &mut Criterion) {
    let x = Rational::new(-7, 3);
    c.bench_function("pochhammer_64", |b| b.iter(|| pochhammer(black_box(&x), 64)));
}

criterion_group!(benches, eval, reverse, rising);
criterion_main!(benches);
