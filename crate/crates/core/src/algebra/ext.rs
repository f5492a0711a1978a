//! Extensions K' = K[y]/(M) of a residue field K.
//!
//! Only what the torsion oracle needs: multiplication, the F_q-coordinate
//! view of K', and the matrices of x ↦ x^q and x ↦ c·x over F_q.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::field::{FiniteField, Fq};
use super::linalg::Matrix;
use super::poly::{self, PolyA};
use super::residue::ResidueField;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExtField {
    base: ResidueField,
    modulus: Vec<u32>,
}

impl ExtField {
    pub fn new(base: &ResidueField, modulus: Vec<u32>) -> Result<Self> {
        if modulus.last() != Some(&1) || modulus.len() < 2 {
            return Err(Error::InvalidField("extension modulus must be monic and nonconstant".into()));
        }
        if !poly::is_irreducible(base, &modulus) {
            return Err(Error::InvalidField("extension modulus is reducible".into()));
        }
        Ok(ExtField { base: base.clone(), modulus })
    }

    /// The first monic irreducible of degree `d` over `base`, scanning lower
    /// coefficient vectors by their index `Σ c_i |K|^i`.
    pub fn first_irreducible(base: &ResidueField, d: usize) -> Self {
        assert!(d >= 1);
        let n = base.order() as u64;
        let mut idx = 0u64;
        loop {
            let mut m = Vec::with_capacity(d + 1);
            let mut r = idx;
            for _ in 0..d {
                m.push((r % n) as u32);
                r /= n;
            }
            m.push(1);
            if r == 0 && poly::is_irreducible(base, &m) {
                return ExtField { base: base.clone(), modulus: m };
            }
            idx += 1;
        }
    }

    pub fn base(&self) -> &ResidueField {
        &self.base
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Degree over K.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Dimension over F_q.
    pub fn fq_dim(&self) -> usize {
        self.degree() * self.base.degree()
    }

    pub fn fq(&self) -> &Fq {
        self.base.base()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        poly::mulmod(&self.base, a, b, &self.modulus)
    }

    pub fn pow(&self, a: &[u32], e: u64) -> Vec<u32> {
        poly::powmod(&self.base, a, e, &self.modulus)
    }

    /// Coordinates over F_q: the digit `t` of the coefficient of `y^j` sits at `j·k + t`.
    pub fn to_fq_coords(&self, a: &[u32]) -> Vec<u32> {
        let k = self.base.degree();
        let mut out = vec![0; self.fq_dim()];
        for (j, &c) in a.iter().enumerate() {
            out[j * k..(j + 1) * k].copy_from_slice(&self.base.digits(c));
        }
        out
    }

    pub fn from_fq_coords(&self, v: &[u32]) -> Vec<u32> {
        let k = self.base.degree();
        let mut out: Vec<u32> = v.chunks(k).map(|ch| self.base.from_digits(ch)).collect();
        poly::trim(&mut out);
        out
    }

    /// Matrix over F_q of x ↦ x^q.
    pub fn frobenius_matrix(&self) -> Matrix {
        let q = self.fq().q() as u64;
        let k = self.base.degree();
        let n = self.fq_dim();
        // (c·y^j)^q = c^q · (y^q)^j
        let yq = self.pow(&[0, 1], q);
        let mut cols = Vec::with_capacity(n);
        let mut yqj = vec![1u32];
        for _ in 0..self.degree() {
            for t in 0..k {
                let c = self.base.from_digits(&unit_vec(k, t));
                let img = poly::scale(&self.base, &yqj, self.base.frobenius(c, 1));
                cols.push(self.to_fq_coords(&img));
            }
            yqj = self.mul(&yqj, &yq);
        }
        Matrix::from_columns(&cols)
    }

    /// Matrix over F_q of multiplication by `c ∈ K`.
    pub fn scalar_matrix(&self, c: u32) -> Matrix {
        let k = self.base.degree();
        let n = self.fq_dim();
        let mut m = Matrix::zeros(n, n);
        for t in 0..k {
            let img = self.base.digits(self.base.mul(c, self.base.from_digits(&unit_vec(k, t))));
            for j in 0..self.degree() {
                for (s, &x) in img.iter().enumerate() {
                    m.set(j * k + s, j * k + t, x);
                }
            }
        }
        m
    }

    pub fn embed(&self, c: u32) -> Vec<u32> {
        if c == 0 { Vec::new() } else { vec![c] }
    }

    pub fn base_ideal_generator(&self) -> &PolyA {
        self.base.ideal().generator()
    }
}

fn unit_vec(k: usize, t: usize) -> Vec<u32> {
    let mut v = vec![0; k];
    v[t] = 1;
    v
}

/// Memoizes `ExtField::first_irreducible`; the search dominates oracle cost.
#[derive(Default)]
pub struct ExtCache {
    map: Mutex<HashMap<(PolyA, usize), Arc<ExtField>>>,
}

impl ExtCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, base: &ResidueField, d: usize) -> Arc<ExtField> {
        let key = (base.ideal().generator().clone(), d);
        if let Some(e) = self.map.lock().expect("cache lock").get(&key) {
            return e.clone();
        }
        let e = Arc::new(ExtField::first_irreducible(base, d));
        self.map.lock().expect("cache lock").entry(key).or_insert(e).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::prime::PrimeIdeal;

    #[test]
    fn frobenius_matrix_matches_power() {
        let f = Fq::of_order(5).unwrap();
        let k = ResidueField::new(&PrimeIdeal::new(PolyA::new(&f, vec![2, 0, 1])).unwrap()).unwrap();
        let e = ExtField::first_irreducible(&k, 3);
        assert_eq!(e.fq_dim(), 6);
        let phi = e.frobenius_matrix();
        for a in [vec![1u32, 2, 3], vec![0, 7, 0], vec![24, 0, 11]] {
            let direct = e.to_fq_coords(&e.pow(&a, 5));
            assert_eq!(phi.mul_vec(e.fq(), &e.to_fq_coords(&a)), direct);
            let c = 13;
            let scaled = e.to_fq_coords(&poly::scale(&k, &a, c));
            assert_eq!(e.scalar_matrix(c).mul_vec(e.fq(), &e.to_fq_coords(&a)), scaled);
        }
        // Φ^{2·3} is the identity on F_{5^6}
        let mut p = Matrix::identity(6);
        for _ in 0..6 {
            p = p.mul(e.fq(), &phi);
        }
        assert_eq!(p, Matrix::identity(6));
    }
}
