//! Residue fields F_𝔩 = A/𝔩.
//!
//! Elements are indices `Σ d_i q^i` of the reduced representative
//! `Σ d_i T^i`, so F_q sits inside as the indices below `q`.  Arithmetic goes
//! through discrete log tables with Zech logarithms for addition.

use std::fmt;
use std::sync::Arc;

use super::field::{FiniteField, Fq};
use super::poly::{self, PolyA};
use super::prime::PrimeIdeal;
use crate::error::{Error, Result};

/// Residue fields larger than this are refused.
pub const MAX_RESIDUE_ORDER: u64 = 1 << 22;

const NO_LOG: u32 = u32::MAX;

struct Inner {
    base: Fq,
    ideal: PrimeIdeal,
    k: usize,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, or `NO_LOG` when `1 + g^d = 0`.
    zech: Vec<u32>,
    neg_one_log: u32,
}

#[derive(Clone)]
pub struct ResidueField(Arc<Inner>);

impl ResidueField {
    pub fn new(ideal: &PrimeIdeal) -> Result<Self> {
        let base = ideal.field().clone();
        let k = ideal.degree();
        let order = ideal.norm();
        if order > MAX_RESIDUE_ORDER {
            return Err(Error::ResourceCap(format!(
                "residue field of order {order} exceeds {MAX_RESIDUE_ORDER}"
            )));
        }
        let order = order as u32;
        let q = base.q();
        let n = (order - 1) as usize;
        let m = ideal.generator().coeffs().to_vec();
        let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * q + c);
        let decode = |mut i: u32| {
            let mut v = Vec::with_capacity(k);
            for _ in 0..k {
                v.push(i % q);
                i /= q;
            }
            poly::trim(&mut v);
            v
        };

        let mut exp = vec![0u32; n];
        let mut found = false;
        for cand in 1..order {
            let g = decode(cand);
            let mut x = vec![1u32];
            let mut ok = true;
            for (i, slot) in exp.iter_mut().enumerate() {
                *slot = encode(&x);
                x = poly::mulmod(&base, &x, &g, &m);
                if x == [1] && i + 1 < n {
                    ok = false;
                    break;
                }
            }
            if ok && x == [1] {
                found = true;
                break;
            }
        }
        assert!(found, "multiplicative group of a finite field is cyclic");

        let mut log = vec![NO_LOG; order as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let d0 = v % q;
                let w = v - d0 + base.add(d0, 1);
                if w == 0 { NO_LOG } else { log[w as usize] }
            })
            .collect();
        let neg_one_log = log[base.neg(1) as usize];
        Ok(ResidueField(Arc::new(Inner {
            base,
            ideal: ideal.clone(),
            k,
            order,
            exp,
            log,
            zech,
            neg_one_log,
        })))
    }

    pub fn base(&self) -> &Fq {
        &self.0.base
    }

    pub fn ideal(&self) -> &PrimeIdeal {
        &self.0.ideal
    }

    /// Degree over F_q.
    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order
    }

    pub fn units(&self) -> std::ops::Range<u32> {
        1..self.0.order
    }

    /// A fixed generator of the unit group.
    pub fn primitive(&self) -> u32 {
        self.0.exp.get(1).copied().unwrap_or(1)
    }

    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    pub fn from_poly(&self, a: &PolyA) -> u32 {
        let r = a.rem(self.0.ideal.generator());
        let q = self.0.base.q();
        r.coeffs().iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn to_poly(&self, mut a: u32) -> PolyA {
        let q = self.0.base.q();
        let mut v = Vec::with_capacity(self.0.k);
        while a > 0 {
            v.push(a % q);
            a /= q;
        }
        PolyA::new(&self.0.base, v)
    }

    /// F_q-coordinates in the basis `1, T, …, T^{k−1}`.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        super::field::digits(a as u64, self.0.base.q(), self.0.k)
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        let q = self.0.base.q();
        d.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// `a^{q^i}`.
    pub fn frobenius(&self, a: u32, i: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let n = (self.0.order - 1) as u64;
        let mut e = 1u64;
        for _ in 0..i {
            e = e * self.0.base.q() as u64 % n.max(1);
        }
        self.exp_at(self.0.log[a as usize] as u64 * e)
    }

    fn exp_at(&self, l: u64) -> u32 {
        let n = self.0.exp.len() as u64;
        self.0.exp[(l % n) as usize]
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.0.base.characteristic() == 2 || self.0.log[a as usize] % 2 == 0
    }

    pub fn format_elem(&self, a: u32) -> String {
        self.to_poly(a).to_string()
    }
}

impl FiniteField for ResidueField {
    fn order(&self) -> u32 {
        self.0.order
    }

    fn characteristic(&self) -> u32 {
        self.0.base.characteristic()
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let n = self.0.exp.len() as u32;
        let (la, lb) = (self.0.log[a as usize], self.0.log[b as usize]);
        let d = if lb >= la { lb - la } else { lb + n - la };
        match self.0.zech[d as usize] {
            NO_LOG => 0,
            z => self.exp_at(la as u64 + z as u64),
        }
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        self.exp_at(self.0.log[a as usize] as u64 + self.0.neg_one_log as u64)
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp_at(self.0.log[a as usize] as u64 + self.0.log[b as usize] as u64)
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.0.exp.len() as u64;
        Some(self.exp_at(n - self.0.log[a as usize] as u64))
    }

    fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = self.0.exp.len() as u64;
        self.exp_at((self.0.log[a as usize] as u64 % n) * (e % n))
    }
}

impl PartialEq for ResidueField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.ideal == other.0.ideal
    }
}

impl Eq for ResidueField {}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A/({})", self.0.ideal)
    }
}
