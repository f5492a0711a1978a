//! Nonzero primes of A = F_q[T].

use std::fmt;

use serde::{Serialize, Serializer};

use super::field::{FiniteField, Fq};
use super::poly::PolyA;
use crate::error::{Error, Result};

/// A prime ideal of A, stored by its monic irreducible generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    generator: PolyA,
}

impl PrimeIdeal {
    pub fn new(generator: PolyA) -> Result<Self> {
        if !generator.is_monic() {
            return Err(Error::NotPrime(format!("{generator} is not monic")));
        }
        if !generator.is_irreducible()? {
            return Err(Error::NotPrime(format!("{generator} is reducible")));
        }
        Ok(PrimeIdeal { generator })
    }

    /// The prime (T).
    pub fn t(field: &Fq) -> Self {
        PrimeIdeal { generator: PolyA::t(field) }
    }

    /// The prime (T − c).
    pub fn linear(field: &Fq, c: u32) -> Self {
        PrimeIdeal { generator: PolyA::linear(field, c) }
    }

    pub fn generator(&self) -> &PolyA {
        &self.generator
    }

    pub fn degree(&self) -> usize {
        self.generator.deg().expect("primes are nonconstant")
    }

    pub fn field(&self) -> &Fq {
        self.generator.field()
    }

    /// `q^{deg}`, the size of the residue field.
    pub fn norm(&self) -> u64 {
        (self.field().q() as u64).pow(self.degree() as u32)
    }

    pub fn is_t(&self) -> bool {
        self.generator == PolyA::t(self.field())
    }

    /// The root `c` when the prime is (T − c).
    pub fn linear_root(&self) -> Option<u32> {
        (self.degree() == 1).then(|| self.field().neg(self.generator.coeff(0)))
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator)
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

impl Serialize for PrimeIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All monic irreducibles of degree `1..=max_degree`, by degree and then by
/// coefficients read from the top down, minus `exclude`.
pub fn enum_primes(field: &Fq, max_degree: usize, exclude: &[PrimeIdeal]) -> Vec<PrimeIdeal> {
    let q = field.q() as u64;
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut g = PolyA::from_index(field, idx).coeffs().to_vec();
            g.resize(d, 0);
            g.push(1);
            let g = PolyA::new(field, g);
            if !super::poly::is_irreducible(field, g.coeffs()) {
                continue;
            }
            let p = PrimeIdeal { generator: g };
            if !exclude.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Remainder of `a` modulo the generator of `l`.
pub fn residue_reduce(a: &PolyA, l: &PrimeIdeal) -> PolyA {
    a.rem(l.generator())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let f = Fq::of_order(7).unwrap();
        let t = PrimeIdeal::t(&f);
        assert_eq!(enum_primes(&f, 1, &[t.clone()]).len(), 6);
        let all = enum_primes(&f, 2, &[]);
        assert_eq!(all.len(), 28);
        assert_eq!(all[0], t);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn residue_examples() {
        let f = Fq::of_order(7).unwrap();
        let l = PrimeIdeal::linear(&f, 3);
        assert_eq!(residue_reduce(&PolyA::linear(&f, 2), &l), PolyA::constant(&f, 1));
        assert!(residue_reduce(&PolyA::t_q_minus_t(&f), &l).is_zero());
        let l2 = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        assert_eq!(residue_reduce(&PolyA::monomial(&f, 1, 2), &l2), PolyA::constant(&f, 6));
    }

    #[test]
    fn rejects_non_primes() {
        let f = Fq::of_order(7).unwrap();
        assert!(PrimeIdeal::new(PolyA::new(&f, vec![6, 0, 1])).is_err());
        assert!(PrimeIdeal::new(PolyA::new(&f, vec![1, 2])).is_err());
    }
}
