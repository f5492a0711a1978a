use criterion::{criterion_group, criterion_main, Criterion};
use drinfeld_bench::{field, module};
use drinfeld_core::{parse_poly, skew_mul, PolyA};
use std::hint::black_box;

fn poly_ops(c: &mut Criterion) {
    let f = field(7);
    let a = parse_poly(&f, "T^40 + 3*T^17 + 2*T + 5").unwrap();
    let b = parse_poly(&f, "T^23 + 6*T^9 + 1").unwrap();
    c.bench_function("poly_mul_deg40x23", |bn| bn.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("poly_gcd", |bn| bn.iter(|| black_box(&a).gcd(black_box(&b)).unwrap()));
    c.bench_function("poly_pow_2401", |bn| bn.iter(|| PolyA::t(&f).pow(black_box(2401))));
}

fn skew_ops(c: &mut Criterion) {
    let f = field(7);
    let phi = module(&f, "T", "T^2 + 1");
    let t2 = PolyA::t(&f).pow(2);
    c.bench_function("skew_mul_phi_t", |bn| bn.iter(|| skew_mul(black_box(phi.phi_t()), black_box(phi.phi_t())).unwrap()));
    c.bench_function("phi_of_t2", |bn| bn.iter(|| phi.phi_of(black_box(&t2))));
}

criterion_group!(benches, poly_ops, skew_ops);
criterion_main!(benches);
