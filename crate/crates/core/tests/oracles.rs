//! Cross-checks of the fast paths against independent slow computations.

use drinfeld_core::algebra::ExtCache;
use drinfeld_core::drinfeld::carlitz_frobenius;
use drinfeld_core::frobenius::{frob_charpoly_solve, frob_matrix_oracle, DEFAULT_MAX_EXT_DEGREE};
use drinfeld_core::irred::{irred_certificate, IrredWitness};
use drinfeld_core::{enum_primes, parse_poly, DrinfeldModule, Fq, PolyA, PrimeIdeal, ResidueField};

fn f7() -> Fq {
    Fq::of_order(7).unwrap()
}

fn module(f: &Fq, g1: &str, g2: &str) -> DrinfeldModule {
    DrinfeldModule::family(&parse_poly(f, g1).unwrap(), &parse_poly(f, g2).unwrap())
}

#[test]
fn charpoly_degree_bounds() {
    let f = f7();
    let phi = module(&f, "T", "T^2 + 1");
    for p in enum_primes(&f, 3, &[]) {
        let psi = phi.reduce_at(&p).unwrap();
        if !psi.is_good() {
            continue;
        }
        let cp = frob_charpoly_solve(&psi).unwrap();
        let d = p.degree();
        for (i, a) in cp.a.iter().enumerate() {
            let bound = ((i + 1) * d).div_ceil(3);
            assert!(a.deg().unwrap_or(0) <= bound, "{p}: deg a_{} = {:?}", i + 1, a.deg());
        }
        assert_eq!(cp.det().deg(), Some(d));
    }
}

#[test]
fn oracle_det_is_carlitz_class() {
    let f = f7();
    let phi = module(&f, "0", "1");
    let cache = ExtCache::new();
    let p = PrimeIdeal::new(parse_poly(&f, "T^2 + 1").unwrap()).unwrap();
    let psi = phi.reduce_at(&p).unwrap();
    for c in [1, 4] {
        let l = PrimeIdeal::linear(&f, c);
        let m = frob_matrix_oracle(&psi, &l, &cache, DEFAULT_MAX_EXT_DEGREE).unwrap();
        let cls = carlitz_frobenius(&p, l.generator()).unwrap();
        assert_eq!(m.det(), cls.coeff(0), "l = {l}");
        let fl = ResidueField::new(&l).unwrap();
        let cp = frob_charpoly_solve(&psi).unwrap();
        let reduced: Vec<u32> = cp.coefficients().iter().map(|a| fl.from_poly(a)).collect();
        assert_eq!(m.charpoly(), reduced);
    }
}

#[test]
fn zeta_scan_rows_are_nonzero_evaluations() {
    let f = f7();
    let phi = module(&f, "T", "1");
    for c in 1..7 {
        let l = PrimeIdeal::linear(&f, c);
        let cert = irred_certificate(&phi, &l, 3).unwrap();
        assert!(cert.verify(&phi).unwrap());
        let IrredWitness::ZetaScan { rows, .. } = &cert.witness else {
            panic!("expected a zeta scan at {l}");
        };
        assert_eq!(rows.len(), 6);
        for row in rows {
            for fail in [&row.a, &row.b] {
                assert_ne!(fail.value, 0);
                assert!(!fail.prime.is_t() && fail.prime != l);
            }
        }
    }
}

#[test]
fn eta_collision_at_t() {
    let f = f7();
    for (g1, g2) in [("0", "1"), ("T", "1"), ("T", "T^2 + 1")] {
        let phi = module(&f, g1, g2);
        let cert = irred_certificate(&phi, &PrimeIdeal::t(&f), 3).unwrap();
        assert!(matches!(cert.witness, IrredWitness::EtaCollision { .. }));
        assert!(cert.verify(&phi).unwrap());
    }
}

#[test]
fn family_membership_by_roots() {
    // g2 must have no root in F_q; g1 vanishes exactly at 0 or everywhere
    let f = f7();
    let t = PolyA::t(&f);
    for idx in 1..f.q().pow(3) as u64 {
        let g = PolyA::from_index(&f, idx);
        let roots: Vec<u32> = (0..7).filter(|&c| g.eval(c) == 0).collect();
        let as_g2 = DrinfeldModule::family(&t, &g).family_type();
        assert_eq!(as_g2 != drinfeld_core::FamilyType::NotInFamily, roots.is_empty(), "g2 = {g}");
        let as_g1 = DrinfeldModule::family(&g, &PolyA::one(&f)).family_type();
        let expect = match roots.len() {
            _ if g.is_zero() => drinfeld_core::FamilyType::Type2,
            1 if roots[0] == 0 => drinfeld_core::FamilyType::Type1,
            7 => drinfeld_core::FamilyType::Type2,
            _ => drinfeld_core::FamilyType::NotInFamily,
        };
        assert_eq!(as_g1, expect, "g1 = {g}");
    }
}
