//! Shared fixtures for the benchmarks under `benches/`.

use drinfeld_core::{parse_poly, DrinfeldModule, Fq};

pub fn field(q: u64) -> Fq {
    Fq::of_order(q).expect("prime power")
}

pub fn module(f: &Fq, g1: &str, g2: &str) -> DrinfeldModule {
    DrinfeldModule::family(&parse_poly(f, g1).expect("g1"), &parse_poly(f, g2).expect("g2"))
}
