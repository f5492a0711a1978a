//! Univariate polynomials.
//!
//! The free functions work over any [`FiniteField`] on coefficient slices
//! (lowest degree first, no trailing zeros).  [`PolyA`] wraps them for the
//! ring A = F_q[T] and keeps its field handle so that operators work.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::field::{FiniteField, Fq};
use crate::error::{Error, Result};

pub fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn add<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(&mut out);
    out
}

pub fn sub<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(&mut out);
    out
}

pub fn scale<F: FiniteField>(f: &F, a: &[u32], c: u32) -> Vec<u32> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = b.len().checked_sub(1).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("trimmed polynomial has a nonzero leading coefficient");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quo = vec![0u32; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        let t = f.mul(c, lead_inv);
        quo[k - db] = t;
        for (i, &y) in b.iter().enumerate() {
            if y != 0 {
                r[k - db + i] = f.sub(r[k - db + i], f.mul(t, y));
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut quo);
    (quo, r)
}

pub fn rem<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(f, a, b).1
}

pub fn monic<F: FiniteField>(f: &F, a: &[u32]) -> Vec<u32> {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(f, a, f.inv(l).expect("nonzero leading coefficient")),
    }
}

/// Monic gcd; `gcd(0, 0)` is the empty (zero) polynomial.
pub fn gcd<F: FiniteField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn mulmod<F: FiniteField>(f: &F, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: FiniteField>(f: &F, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    acc
}

pub fn eval<F: FiniteField>(f: &F, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Ben-Or irreducibility test: no factor of degree `i ≤ n/2` divides
/// `x^{Q^i} − x`.  Constants are reported reducible; callers guard that case.
pub fn is_irreducible<F: FiniteField>(f: &F, m: &[u32]) -> bool {
    let n = match m.len() {
        0 | 1 => return false,
        l => l - 1,
    };
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 0..n / 2 {
        h = powmod(f, &h, f.order() as u64, m);
        let g = gcd(f, &sub(f, &h, &x), m);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Degree of a polynomial, with a sentinel for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of A = F_q[T].
#[derive(Clone)]
pub struct PolyA {
    field: Fq,
    coeffs: Vec<u32>,
}

impl PolyA {
    pub fn new(field: &Fq, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.q()));
        trim(&mut coeffs);
        PolyA { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Fq) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Fq) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &Fq, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The variable T.
    pub fn t(field: &Fq) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: &Fq, c: u32, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    /// T − c.
    pub fn linear(field: &Fq, c: u32) -> Self {
        Self::new(field, vec![field.neg(c), 1])
    }

    /// T^q − T.
    pub fn t_q_minus_t(field: &Fq) -> Self {
        let q = field.q() as usize;
        let mut v = vec![0; q + 1];
        v[q] = 1;
        v[1] = field.neg(1);
        Self::new(field, v)
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree of a nonzero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn wrap(&self, coeffs: Vec<u32>) -> Self {
        Self::new(&self.field, coeffs)
    }

    fn check(&self, other: &Self) {
        assert!(self.field.same_field(&other.field), "polynomials over different fields");
    }

    pub fn scale(&self, c: u32) -> Self {
        self.wrap(scale(&self.field, &self.coeffs, c))
    }

    pub fn monic(&self) -> Self {
        self.wrap(monic(&self.field, &self.coeffs))
    }

    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        self.check(b);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = divrem(&self.field, &self.coeffs, &b.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    /// Remainder modulo a nonzero polynomial.
    pub fn rem(&self, b: &Self) -> Self {
        self.check(b);
        assert!(!b.is_zero(), "reduction modulo zero");
        self.wrap(rem(&self.field, &self.coeffs, &b.coeffs))
    }

    pub fn divides(&self, b: &Self) -> bool {
        !self.is_zero() && b.rem(self).is_zero()
    }

    /// Monic gcd.  Fails only when both inputs are zero.
    pub fn gcd(&self, b: &Self) -> Result<Self> {
        self.check(b);
        if self.is_zero() && b.is_zero() {
            return Err(Error::GcdUndefined);
        }
        Ok(self.wrap(gcd(&self.field, &self.coeffs, &b.coeffs)))
    }

    /// `(g, s, t)` with `g = s·self + t·b` monic.
    pub fn xgcd(&self, b: &Self) -> Result<(Self, Self, Self)> {
        self.check(b);
        if self.is_zero() && b.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = f.inv(r0.leading()).expect("nonzero");
        Ok((r0.scale(li), s0.scale(li), t0.scale(li)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn powmod(&self, e: u64, m: &Self) -> Self {
        self.check(m);
        self.wrap(powmod(&self.field, &self.coeffs, e, &m.coeffs))
    }

    pub fn eval(&self, x: u32) -> u32 {
        eval(&self.field, &self.coeffs, x)
    }

    /// `self^{q^i}`, computed as `self(T^{q^i})` since coefficients lie in F_q.
    pub fn frobenius(&self, i: u32) -> Self {
        if i == 0 || self.is_constant() {
            return self.clone();
        }
        let step = (self.field.q() as usize).pow(i);
        let mut v = vec![0u32; (self.coeffs.len() - 1) * step + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            v[k * step] = c;
        }
        self.wrap(v)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        match self.deg() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => Ok(is_irreducible(&self.field, &self.coeffs)),
        }
    }

    /// Exponent of the largest power of T dividing `self`; `None` for zero.
    pub fn t_adic_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Index of `self` among polynomials of degree `< n`: `Σ c_i q^i`.
    pub fn index(&self) -> u64 {
        let q = self.field.q() as u64;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }

    pub fn from_index(field: &Fq, mut idx: u64) -> Self {
        let q = field.q() as u64;
        let mut v = Vec::new();
        while idx > 0 {
            v.push((idx % q) as u32);
            idx /= q;
        }
        Self::new(field, v)
    }
}

impl PartialEq for PolyA {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_field(&other.field)
    }
}

impl Eq for PolyA {}

impl Hash for PolyA {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for PolyA {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for PolyA {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &PolyA {
    type Output = PolyA;
    fn add(self, rhs: &PolyA) -> PolyA {
        self.check(rhs);
        self.wrap(add(&self.field, &self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &PolyA {
    type Output = PolyA;
    fn sub(self, rhs: &PolyA) -> PolyA {
        self.check(rhs);
        self.wrap(sub(&self.field, &self.coeffs, &rhs.coeffs))
    }
}

impl Mul for &PolyA {
    type Output = PolyA;
    fn mul(self, rhs: &PolyA) -> PolyA {
        self.check(rhs);
        self.wrap(mul(&self.field, &self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &PolyA {
    type Output = PolyA;
    fn neg(self) -> PolyA {
        self.wrap(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }
}

impl fmt::Display for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = self.field.format_elem(c);
            match (k, c) {
                (0, _) => f.write_str(&coef)?,
                (1, 1) => f.write_str("T")?,
                (_, 1) => write!(f, "T^{k}")?,
                (1, _) => write!(f, "{coef}*T")?,
                _ => write!(f, "{coef}*T^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyA({self})")
    }
}

impl Serialize for PolyA {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Fq {
        Fq::of_order(7).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let f = f7();
        let t = PolyA::t(&f);
        let tq = PolyA::t_q_minus_t(&f);
        assert_eq!(t.gcd(&tq).unwrap(), t);
        assert_eq!(PolyA::zero(&f).gcd(&tq).unwrap(), tq);
        let t2p1 = PolyA::new(&f, vec![1, 0, 1]);
        assert!(t2p1.gcd(&tq).unwrap().is_one());
        assert!(matches!(PolyA::zero(&f).gcd(&PolyA::zero(&f)), Err(Error::GcdUndefined)));
        // gcd is monic even for a non-monic input
        assert_eq!(t.scale(3).gcd(&PolyA::zero(&f)).unwrap(), t);
    }

    #[test]
    fn irreducibility_examples() {
        let f = f7();
        assert!(PolyA::t(&f).is_irreducible().unwrap());
        assert!(!PolyA::new(&f, vec![6, 0, 1]).is_irreducible().unwrap());
        assert!(PolyA::new(&f, vec![1, 0, 1]).is_irreducible().unwrap());
        assert!(matches!(PolyA::constant(&f, 3).is_irreducible(), Err(Error::ConstantPolynomial)));
    }

    #[test]
    fn frobenius_matches_power() {
        let f = f7();
        let a = PolyA::new(&f, vec![3, 1, 5]);
        assert_eq!(a.frobenius(1), a.pow(7));
        assert_eq!(a.frobenius(2), a.pow(49));
    }

    #[test]
    fn display() {
        let f = f7();
        assert_eq!(PolyA::new(&f, vec![6, 0, 3, 1]).to_string(), "T^3 + 3*T^2 + 6");
        assert_eq!(PolyA::zero(&f).to_string(), "0");
        let f9 = Fq::of_order(9).unwrap();
        assert_eq!(PolyA::new(&f9, vec![0, 5]).to_string(), "[2,1]*T");
    }

    #[test]
    fn degree_sentinel() {
        let f = f7();
        assert_eq!(PolyA::zero(&f).degree(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
    }
}
