//! Can Frob at 𝔩₂ be a scalar multiple of an inverse-transpose twist of Frob
//! at 𝔩₁?  Decided from traces and determinants over all σ and λ.

use serde::Serialize;

use crate::algebra::{poly, FiniteField, PolyA, ResidueField};

/// All field isomorphisms F₁ → F₂ as lookup tables.
pub fn field_isomorphisms(f1: &ResidueField, f2: &ResidueField) -> Vec<Vec<u32>> {
    if f1.order() != f2.order() {
        return Vec::new();
    }
    let fq = f1.base();
    let e = fq.spec().e as usize;
    let m = &fq.spec().modulus;
    // images of u: roots of m in F₂
    let u_images: Vec<u32> = if e == 1 {
        vec![1]
    } else {
        f2.elements().filter(|&x| poly::eval(f2, m, x) == 0).collect()
    };
    let embed = |c: u32, su: u32| -> u32 {
        let d = fq.u_digits(c);
        let mut acc = 0;
        let mut pw = 1;
        for &di in &d {
            acc = f2.add(acc, f2.mul(f2.from_int(di as i64), pw));
            pw = f2.mul(pw, su);
        }
        acc
    };
    let g = f1.ideal().generator().coeffs().to_vec();
    let mut out = Vec::new();
    for su in u_images {
        let g_img: Vec<u32> = g.iter().map(|&c| embed(c, su)).collect();
        for st in f2.elements() {
            if poly::eval(f2, &g_img, st) != 0 {
                continue;
            }
            let table = f1
                .elements()
                .map(|x| {
                    let coeffs: Vec<u32> = f1.to_poly(x).coeffs().iter().map(|&c| embed(c, su)).collect();
                    poly::eval(f2, &coeffs, st)
                })
                .collect();
            out.push(table);
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetOutcome {
    /// No σ and λ match trace and determinant.
    Refuted,
    /// Some (σ, λ) is consistent.
    NotRefuted,
    /// |F₁| ≠ |F₂|: no σ exists.
    NotApplicable,
}

/// Charpoly of the inverse of a matrix with monic charpoly `p` (lowest first).
pub fn inverse_charpoly<F: FiniteField>(f: &F, p: &[u32]) -> Vec<u32> {
    let c0i = f.inv(p[0]).expect("invertible");
    p.iter().rev().map(|&c| f.mul(c, c0i)).collect()
}

fn trace_det<F: FiniteField>(f: &F, p: &[u32]) -> (u32, u32) {
    let n = p.len() - 1;
    let det = if n % 2 == 0 { p[0] } else { f.neg(p[0]) };
    (f.neg(p[n - 1]), det)
}

/// `p1`: charpoly of Frob⁻¹ over F₁; `p2`: charpoly of Frob over F₂, both cubic.
pub fn coset_trace_test(p1: &[u32], f1: &ResidueField, p2: &[u32], f2: &ResidueField) -> CosetOutcome {
    if f1.order() != f2.order() {
        return CosetOutcome::NotApplicable;
    }
    let (t1, d1) = trace_det(f1, p1);
    let (t2, d2) = trace_det(f2, p2);
    for sigma in field_isomorphisms(f1, f2) {
        let (st, sd) = (sigma[t1 as usize], sigma[d1 as usize]);
        for lam in f2.units() {
            if st == f2.mul(lam, t2) && sd == f2.mul(f2.pow(lam, 3), d2) {
                return CosetOutcome::NotRefuted;
            }
        }
    }
    CosetOutcome::Refuted
}

/// Reduce a charpoly over A into F_𝔩.
pub fn reduce_charpoly(coeffs: &[PolyA], fl: &ResidueField) -> Vec<u32> {
    coeffs.iter().map(|c| fl.from_poly(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, PrimeIdeal};
    use crate::drinfeld::DrinfeldModule;
    use crate::frobenius::{charpoly_over, frob_charpoly_deg1};

    fn run(phi: &DrinfeldModule, c: u32, l1: &PrimeIdeal, l2: &PrimeIdeal) -> CosetOutcome {
        let (f1, f2) = (ResidueField::new(l1).unwrap(), ResidueField::new(l2).unwrap());
        let cp = frob_charpoly_deg1(phi, c).unwrap();
        let p1 = inverse_charpoly(&f1, &charpoly_over(&cp, &f1));
        coset_trace_test(&p1, &f1, &charpoly_over(&cp, &f2), &f2)
    }

    #[test]
    fn isomorphism_counts() {
        let f = Fq::of_order(7).unwrap();
        let a = ResidueField::new(&PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap()).unwrap();
        let b = ResidueField::new(&PrimeIdeal::new(PolyA::new(&f, vec![2, 0, 1])).unwrap()).unwrap();
        assert_eq!(field_isomorphisms(&a, &b).len(), 2);
        let f9 = Fq::of_order(9).unwrap();
        let l = ResidueField::new(&PrimeIdeal::linear(&f9, 2)).unwrap();
        let sig = field_isomorphisms(&l, &l);
        assert_eq!(sig.len(), 2);
    }

    #[test]
    fn lemma_cases() {
        let f = Fq::of_order(7).unwrap();
        let t1 = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let t2 = DrinfeldModule::family(&PolyA::zero(&f), &PolyA::one(&f));
        let (l1, l2) = (PrimeIdeal::linear(&f, 1), PrimeIdeal::linear(&f, 2));
        for c in 3..7 {
            assert_eq!(run(&t2, c, &l1, &l2), CosetOutcome::Refuted);
        }
        // c − 2 a non-square in F_7: c = 5 gives 3, c = 6 gives 4 (a square)
        assert_eq!(run(&t1, 5, &l1, &l2), CosetOutcome::Refuted);
        assert_eq!(run(&t1, 6, &l1, &l2), CosetOutcome::NotRefuted);
        let m1 = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        let m2 = PrimeIdeal::new(PolyA::new(&f, vec![2, 0, 1])).unwrap();
        for c in 1..7 {
            assert_eq!(run(&t1, c, &m1, &m2), CosetOutcome::Refuted);
        }
        assert_eq!(run(&t1, 3, &l1, &m1), CosetOutcome::NotApplicable);
    }
}
