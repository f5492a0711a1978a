//! Quotients A/𝔞 for a nonconstant modulus 𝔞, prime or not.

use std::collections::VecDeque;

use super::field::Fq;
use super::poly::PolyA;
use super::prime::{enum_primes, PrimeIdeal};
use crate::error::{Error, Result};

/// Largest quotient ring that will be enumerated element by element.
pub const MAX_ENUMERATED: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct QuotientRing {
    modulus: PolyA,
    factors: Vec<(PrimeIdeal, u32)>,
}

/// Factorization by trial division; moduli here have degree ≤ 6 or so.
fn factor(m: &PolyA) -> Vec<(PrimeIdeal, u32)> {
    let f = m.field();
    let mut rest = m.monic();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg().unwrap_or(0) >= 2 * d {
        for p in enum_primes(f, d, &[]).into_iter().filter(|p| p.degree() == d) {
            let mut e = 0;
            while p.generator().divides(&rest) {
                rest = rest.divrem(p.generator()).expect("nonzero divisor").0;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        d += 1;
    }
    if rest.deg().unwrap_or(0) > 0 {
        out.push((PrimeIdeal::new(rest).expect("remaining cofactor is irreducible"), 1));
    }
    out.sort();
    out
}

impl QuotientRing {
    pub fn new(modulus: &PolyA) -> Result<Self> {
        if modulus.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let modulus = modulus.monic();
        let factors = factor(&modulus);
        Ok(QuotientRing { modulus, factors })
    }

    pub fn field(&self) -> &Fq {
        self.modulus.field()
    }

    pub fn modulus(&self) -> &PolyA {
        &self.modulus
    }

    pub fn factors(&self) -> &[(PrimeIdeal, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg().expect("nonconstant")
    }

    pub fn size(&self) -> u64 {
        (self.field().q() as u64).pow(self.degree() as u32)
    }

    /// |(A/𝔞)^×| = Π q^{d(e−1)} (q^d − 1).
    pub fn unit_count(&self) -> u64 {
        let q = self.field().q() as u64;
        self.factors
            .iter()
            .map(|(p, e)| {
                let n = q.pow(p.degree() as u32);
                n.pow(e - 1) * (n - 1)
            })
            .product()
    }

    pub fn reduce(&self, a: &PolyA) -> PolyA {
        a.rem(&self.modulus)
    }

    pub fn mul(&self, a: &PolyA, b: &PolyA) -> PolyA {
        self.reduce(&(a * b))
    }

    pub fn is_unit(&self, a: &PolyA) -> bool {
        !a.is_zero() && a.gcd(&self.modulus).map(|g| g.is_one()).unwrap_or(false)
    }

    pub fn inv(&self, a: &PolyA) -> Option<PolyA> {
        let a = self.reduce(a);
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.xgcd(&self.modulus).ok()?;
        g.is_one().then(|| self.reduce(&s))
    }

    pub fn pow(&self, a: &PolyA, e: u64) -> PolyA {
        a.powmod(e, &self.modulus)
    }

    /// Images under A/𝔞 → Π A/𝔭^e.
    pub fn crt_components(&self, a: &PolyA) -> Vec<PolyA> {
        self.factors
            .iter()
            .map(|(p, e)| a.rem(&p.generator().pow(*e as u64)))
            .collect()
    }

    pub fn index(&self, a: &PolyA) -> u64 {
        self.reduce(a).index()
    }

    pub fn from_index(&self, idx: u64) -> PolyA {
        PolyA::from_index(self.field(), idx)
    }

    pub fn elements(&self) -> impl Iterator<Item = PolyA> + '_ {
        (0..self.size()).map(|i| self.from_index(i))
    }

    /// Whether `gens` generate (A/𝔞)^×, by closure from 1.
    pub fn generates_units(&self, gens: &[PolyA]) -> Result<bool> {
        let size = self.size();
        if size > MAX_ENUMERATED {
            return Err(Error::ResourceCap(format!(
                "|A/a| = {size} exceeds the enumeration cap {MAX_ENUMERATED}"
            )));
        }
        let gens: Vec<PolyA> = gens.iter().map(|g| self.reduce(g)).collect();
        if gens.iter().any(|g| !self.is_unit(g)) {
            return Ok(false);
        }
        let target = self.unit_count();
        let mut seen = vec![false; size as usize];
        let one = PolyA::one(self.field());
        seen[self.index(&one) as usize] = true;
        let mut count = 1u64;
        let mut queue = VecDeque::from([one]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                let i = y.index() as usize;
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    if count == target {
                        return Ok(true);
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(count == target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_counts_match_enumeration() {
        let f = Fq::of_order(5).unwrap();
        for m in [vec![0, 0, 1], vec![1, 0, 1], vec![4, 0, 1], vec![0, 1, 0, 1], vec![1, 2, 1]] {
            let r = QuotientRing::new(&PolyA::new(&f, m)).unwrap();
            let brute = r.elements().filter(|a| r.is_unit(a)).count() as u64;
            assert_eq!(r.unit_count(), brute);
        }
    }

    #[test]
    fn generation() {
        let f = Fq::of_order(7).unwrap();
        let l = PolyA::linear(&f, 1);
        let r = QuotientRing::new(&(&l * &l)).unwrap();
        assert_eq!(r.unit_count(), 42);
        // 3 generates F_7^× but only the constants
        assert!(!r.generates_units(&[PolyA::constant(&f, 3)]).unwrap());
        assert!(r.generates_units(&[PolyA::constant(&f, 3), PolyA::t(&f)]).unwrap());
        let inv = r.inv(&PolyA::t(&f)).unwrap();
        assert!(r.mul(&inv, &PolyA::t(&f)).is_one());
        assert!(r.inv(&l).is_none());
    }
}
