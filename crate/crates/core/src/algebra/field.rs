//! The finite field F_q = F_p[u]/(m(u)).
//!
//! Elements are `u32` indices: the element `Σ d_i u^i` (digits `d_i < p`) is
//! stored as `Σ d_i p^i`.  Zero is index 0 and one is index 1, so prime-field
//! elements coincide with their integer representatives.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `q` for which full add/mul tables are built.
pub const MAX_TABLE_Q: u32 = 1024;

/// Arithmetic shared by every finite field in the crate.  Elements are dense
/// indices in `0..order()` with 0 and 1 the additive and multiplicative identities.
pub trait FiniteField {
    fn order(&self) -> u32;
    fn characteristic(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> Option<u32>;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.characteristic() as i64) as u32
    }
}

/// Description of F_q as F_p[u]/(modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic, lowest degree first, length `e + 1`.
    pub modulus: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p as u32, e))
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, vec![0, 1])
    }

    /// F_{p^e} with the least monic irreducible modulus, ordering candidates by
    /// the integer `Σ a_i p^i` of their lower coefficients.
    pub fn canonical(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        if e == 1 {
            return Self::prime(p);
        }
        let fp = Fq::new(Self::prime(p)?)?;
        let count = (p as u64).checked_pow(e).filter(|&c| c <= MAX_TABLE_Q as u64);
        let Some(count) = count else {
            return Err(Error::InvalidField(format!("{p}^{e} exceeds {MAX_TABLE_Q}")));
        };
        for idx in 0..count {
            let mut m = digits(idx, p, e as usize);
            m.push(1);
            if crate::algebra::poly::is_irreducible(&fp, &m) {
                return Self::new(p, e, m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn for_order(q: u64) -> Result<Self> {
        let (p, e) =
            prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::canonical(p, e)
    }

    pub fn new(p: u32, e: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if modulus.len() != e as usize + 1 || modulus.last() != Some(&1) {
            return Err(Error::InvalidField(format!("modulus must be monic of degree {e}")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficients must lie in 0..{p}")));
        }
        if e > 1 {
            let fp = Fq::new(Self::prime(p)?)?;
            if !crate::algebra::poly::is_irreducible(&fp, &modulus) {
                return Err(Error::InvalidField("modulus is reducible over F_p".into()));
            }
        }
        Ok(FieldSpec { p, e, modulus })
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.e)
    }
}

pub(crate) fn digits(mut idx: u64, base: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % base as u64) as u32);
        idx /= base as u64;
    }
    out
}

struct FqInner {
    spec: FieldSpec,
    q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Table-driven F_q.  Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Fq(Arc<FqInner>);

impl Fq {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let q = spec.p.checked_pow(spec.e).filter(|&q| q <= MAX_TABLE_Q).ok_or_else(|| {
            Error::InvalidField(format!("q = {}^{} exceeds {MAX_TABLE_Q}", spec.p, spec.e))
        })?;
        let (p, e) = (spec.p, spec.e as usize);
        let n = q as usize;
        let elems: Vec<Vec<u32>> = (0..q as u64).map(|i| digits(i, p, e)).collect();
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &x| acc * p + x);

        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = (0..e).map(|i| (elems[a][i] + elems[b][i]) % p).collect();
                add[a * n + b] = encode(&s) as u16;
                // schoolbook product then reduction by the monic modulus
                let mut prod = vec![0u32; 2 * e];
                for i in 0..e {
                    if elems[a][i] == 0 {
                        continue;
                    }
                    for j in 0..e {
                        prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
                    }
                }
                for k in (e..2 * e).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (i, &m) in spec.modulus.iter().enumerate().take(e) {
                        prod[k - e + i] = (prod[k - e + i] + (p - c) * m) % p;
                    }
                    prod[k] = 0;
                }
                mul[a * n + b] = encode(&prod[..e]) as u16;
            }
        }
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * n + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        Ok(Fq(Arc::new(FqInner { spec, q, add, mul, neg, inv })))
    }

    pub fn of_order(q: u64) -> Result<Self> {
        Self::new(FieldSpec::for_order(q)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    /// Digits of `a` in the basis `1, u, u², …`.
    pub fn u_digits(&self, a: u32) -> Vec<u32> {
        digits(a as u64, self.p(), self.0.spec.e as usize)
    }

    pub fn from_u_digits(&self, d: &[u32]) -> u32 {
        let p = self.p();
        d.iter().rev().fold(0u32, |acc, &x| acc * p + x % p)
    }

    /// Rendering used by the polynomial text format.
    pub fn format_elem(&self, a: u32) -> String {
        if self.0.spec.e == 1 {
            a.to_string()
        } else {
            let d = self.u_digits(a);
            let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q()
    }

    pub fn same_field(&self, other: &Fq) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl FiniteField for Fq {
    fn order(&self) -> u32 {
        self.0.q
    }

    fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add[(a * self.0.q + b) as usize] as u32
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize] as u32
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.mul[(a * self.0.q + b) as usize] as u32
    }

    fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.inv[a as usize] as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_uses_u2_plus_1() {
        let spec = FieldSpec::canonical(3, 2).unwrap();
        assert_eq!(spec.modulus, vec![1, 0, 1]);
        let f = Fq::new(spec).unwrap();
        // u * u = -1
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 25] {
            let f = Fq::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    assert_eq!(f.pow(a, q - 1), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, f.q() - 1] {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FieldSpec::for_order(6).is_err());
        assert!(FieldSpec::new(3, 2, vec![2, 0, 1]).is_err()); // u^2 - 1 reducible
        assert!(FieldSpec::prime(9).is_err());
    }
}
