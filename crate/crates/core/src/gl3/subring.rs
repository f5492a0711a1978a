//! Subrings of A/𝔞 generated by a set, as F_p-spans closed under products.

use serde::Serialize;

use crate::algebra::{Fq, Matrix, PolyA, QuotientRing};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct SubringReport {
    pub modulus: PolyA,
    /// F_p-basis of the subring.
    pub basis: Vec<PolyA>,
    pub dimension: usize,
    /// dim_{F_p} A/𝔞.
    pub ring_dimension: usize,
    pub is_full: bool,
    #[serde(skip)]
    prime_field: Option<Fq>,
}

struct Coords {
    fp: Fq,
    e: usize,
    n: usize,
}

impl Coords {
    fn of(&self, ring: &QuotientRing, x: &PolyA) -> Vec<u32> {
        let f = ring.field();
        let r = ring.reduce(x);
        let mut v = Vec::with_capacity(self.e * self.n);
        for i in 0..self.n {
            let mut d = f.u_digits(r.coeff(i));
            d.resize(self.e, 0);
            v.extend(d);
        }
        v
    }
}

fn in_span(fp: &Fq, basis: &[Vec<u32>], v: &[u32]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(&rows).rank(fp) == basis.len()
}

/// Closure of `s ∪ {0, 1}` under + and × in A/𝔞.
pub fn subring_generated(s: &[PolyA], a: &PolyA) -> Result<SubringReport> {
    let ring = QuotientRing::new(a)?;
    let f = ring.field();
    let coords = Coords { fp: Fq::of_order(f.p() as u64)?, e: f.spec().e as usize, n: ring.degree() };
    let mut basis: Vec<PolyA> = Vec::new();
    let mut vecs: Vec<Vec<u32>> = Vec::new();
    let add = |x: PolyA, basis: &mut Vec<PolyA>, vecs: &mut Vec<Vec<u32>>| {
        let v = coords.of(&ring, &x);
        if !in_span(&coords.fp, vecs, &v) {
            vecs.push(v);
            basis.push(ring.reduce(&x));
            true
        } else {
            false
        }
    };
    add(PolyA::one(f), &mut basis, &mut vecs);
    for x in s {
        add(x.clone(), &mut basis, &mut vecs);
    }
    let mut done = 0;
    while done < basis.len() {
        let i = done;
        for j in 0..=i {
            let prod = ring.mul(&basis[i], &basis[j]);
            add(prod, &mut basis, &mut vecs);
        }
        done += 1;
    }
    let ring_dimension = coords.e * coords.n;
    Ok(SubringReport {
        modulus: ring.modulus().clone(),
        dimension: basis.len(),
        is_full: basis.len() == ring_dimension,
        ring_dimension,
        basis,
        prime_field: Some(coords.fp),
    })
}

impl SubringReport {
    pub fn size(&self) -> u128 {
        let p = self.basis.first().map_or(1, |b| b.field().p()) as u128;
        p.pow(self.dimension as u32)
    }

    /// All elements, for small subrings.
    pub fn elements(&self) -> Vec<PolyA> {
        let f = self.modulus.field();
        let fp = self.prime_field.as_ref().expect("built by subring_generated");
        let p = fp.q();
        let mut out = vec![PolyA::zero(f)];
        for b in &self.basis {
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for x in &out {
                for c in 0..p {
                    next.push(x + &b.scale(c));
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = Fq::of_order(7).unwrap();
        let a = &PolyA::linear(&f, 1) * &PolyA::linear(&f, 2);
        let s = [-&PolyA::linear(&f, 3), -&PolyA::linear(&f, 4)];
        let r = subring_generated(&s, &a).unwrap();
        assert!(r.is_full);
        assert_eq!(r.size(), 49);
        let r = subring_generated(&[PolyA::zero(&f)], &a).unwrap();
        assert!(!r.is_full);
        assert_eq!(r.elements().len(), 7);
        let r = subring_generated(&[], &a).unwrap();
        assert_eq!(r.dimension, 1);
    }
}
