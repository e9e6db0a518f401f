use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kstab::batch;
use kstab::exactalg::{rat, BinaryForm, Rational};
use kstab::toriclat::{q_polygon, semigroup_generators};
use kstab::wps::{parse_equation, WeightedEquation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn forms(n: usize, degree: usize, seed: u64) -> Vec<BinaryForm<Rational>> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            // products of a few repeated linear factors
            let mut f = BinaryForm::constant(rat(1, 1));
            let mut left = degree;
            while left > 0 {
                let m = r.gen_range(1..=left.min(3));
                let l = BinaryForm::linear(rat(r.gen_range(-5..=5), 1), rat(r.gen_range(1..=5), 1));
                f = f.mul(&l.pow(m));
                left -= m;
            }
            f
        })
        .collect()
}

fn equations(n: usize, a: usize, seed: u64) -> Vec<WeightedEquation> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c: Vec<i64> = (0..5).map(|_| r.gen_range(-4..=4)).collect();
            let text = format!(
                "{}*z^2 + {}*z*w + w^2 + {}*x^{a}*z + {}*y^{a}*w + x^{} - {}*x*y^{}",
                c[0],
                c[1],
                c[2],
                c[3],
                2 * a,
                c[4],
                2 * a - 1
            );
            parse_equation(&text, a).unwrap()
        })
        .collect()
}

fn bench_classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify_forms");
    for degree in [8usize, 16] {
        let fs = forms(256, degree, 7);
        let a = degree / 2;
        g.bench_with_input(BenchmarkId::new("seq", degree), &fs, |b, fs| {
            b.iter(|| batch::classify_forms_seq(black_box(fs), a))
        });
        #[cfg(feature = "parallel")]
        g.bench_with_input(BenchmarkId::new("par", degree), &fs, |b, fs| {
            b.iter(|| batch::classify_forms_par(black_box(fs), a))
        });
    }
    g.finish();
}

fn bench_k_classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("k_classify_all");
    g.sample_size(20);
    let eqs = equations(128, 4, 11);
    g.bench_function("seq", |b| b.iter(|| batch::k_classify_all_seq(black_box(&eqs))));
    #[cfg(feature = "parallel")]
    g.bench_function("par", |b| b.iter(|| batch::k_classify_all_par(black_box(&eqs))));
    g.finish();
}

fn bench_hilbert(c: &mut Criterion) {
    let mut g = c.benchmark_group("hilbert_basis");
    g.sample_size(10);
    for a in [8u64, 24] {
        let q = q_polygon(a).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(a), &q, |b, q| {
            b.iter(|| semigroup_generators(black_box(q)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_classify, bench_k_classify, bench_hilbert);
criterion_main!(benches);
