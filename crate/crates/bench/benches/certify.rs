use criterion::{criterion_group, criterion_main, Criterion};
use drinfeld_bench::{field, module};
use drinfeld_core::certify::{CertOptions, Context};
use drinfeld_core::frobenius::frob_charpoly_solve;
use drinfeld_core::{parse_poly, PrimeIdeal};
use std::hint::black_box;

fn charpoly(c: &mut Criterion) {
    let f = field(7);
    let phi = module(&f, "T", "1");
    for s in ["T - 3", "T^2 + 1", "T^3 + 3"] {
        let p = PrimeIdeal::new(parse_poly(&f, s).unwrap()).unwrap();
        let psi = phi.reduce_at(&p).unwrap();
        c.bench_function(&format!("charpoly_solve_deg{}", p.degree()), |bn| {
            bn.iter(|| frob_charpoly_solve(black_box(&psi)).unwrap())
        });
    }
}

fn certificates(c: &mut Criterion) {
    let f = field(7);
    let l = PrimeIdeal::linear(&f, 3);
    c.bench_function("certify_l_adic_deg1", |bn| {
        bn.iter(|| {
            let ctx = Context::new(module(&f, "T", "1"), CertOptions::default());
            ctx.certify_l_adic(black_box(&l))
        })
    });
}

criterion_group!(benches, charpoly, certificates);
criterion_main!(benches);
