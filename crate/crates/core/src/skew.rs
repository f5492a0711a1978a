//! Twisted polynomials K{τ} with τ·a = a^q·τ, and their kernels as
//! q-linearized polynomials.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{ExtCache, ExtField, FiniteField, Fq, Matrix, PolyA, ResidueField};
use crate::algebra::poly::Degree;
use crate::error::{Error, Result};

/// A commutative coefficient ring carrying the q-power Frobenius.
pub trait TwistRing: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// `a^{q^i}`.
    fn twist(&self, a: &Self::Elem, i: u32) -> Self::Elem;
    fn q(&self) -> u32;
    fn same_ring(&self, other: &Self) -> bool;
    fn format(&self, a: &Self::Elem) -> String;
}

/// The ring A = F_q[T] as a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing(pub Fq);

impl TwistRing for PolyRing {
    type Elem = PolyA;

    fn zero(&self) -> PolyA {
        PolyA::zero(&self.0)
    }
    fn one(&self) -> PolyA {
        PolyA::one(&self.0)
    }
    fn is_zero(&self, a: &PolyA) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &PolyA, b: &PolyA) -> PolyA {
        a + b
    }
    fn sub(&self, a: &PolyA, b: &PolyA) -> PolyA {
        a - b
    }
    fn mul(&self, a: &PolyA, b: &PolyA) -> PolyA {
        a * b
    }
    fn inv(&self, a: &PolyA) -> Option<PolyA> {
        if a.deg() == Some(0) {
            self.0.inv(a.leading()).map(|c| PolyA::constant(&self.0, c))
        } else {
            None
        }
    }
    fn twist(&self, a: &PolyA, i: u32) -> PolyA {
        a.frobenius(i)
    }
    fn q(&self) -> u32 {
        self.0.q()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.0.same_field(&other.0)
    }
    fn format(&self, a: &PolyA) -> String {
        a.to_string()
    }
}

impl TwistRing for ResidueField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::mul(self, *a, *b)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        FiniteField::inv(self, *a)
    }
    fn twist(&self, a: &u32, i: u32) -> u32 {
        self.frobenius(*a, i)
    }
    fn q(&self) -> u32 {
        self.base().q()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self == other
    }
    fn format(&self, a: &u32) -> String {
        self.format_elem(*a)
    }
}

/// `Σ c_i τ^i`, lowest τ-degree first, no trailing zeros.
#[derive(Clone, Debug)]
pub struct SkewPoly<R: TwistRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: TwistRing> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coeffs == other.coeffs
    }
}

impl<R: TwistRing> SkewPoly<R> {
    pub fn new(ring: &R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &R) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    /// c·τ^k.
    pub fn monomial(ring: &R, c: R::Elem, k: usize) -> Self {
        let mut v = vec![ring.zero(); k + 1];
        v[k] = c;
        Self::new(ring, v)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.same_ring(&other.ring) { Ok(()) } else { Err(Error::RingMismatch) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.ring.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(&self.ring, v))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.ring.sub(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(&self.ring, v))
    }

    /// `c · self` with `c` a constant on the left.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        Self::new(&self.ring, self.coeffs.iter().map(|a| self.ring.mul(c, a)).collect())
    }

    /// `τ^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.ring.zero(); k];
        v.extend(self.coeffs.iter().map(|a| self.ring.twist(a, k as u32)));
        Self::new(&self.ring, v)
    }

    /// Remainder `r` of `self = h·f + r` with `deg r < deg f`.
    pub fn rem_right(&self, f: &Self) -> Result<Self> {
        self.check(f)?;
        let n = f.deg().ok_or(Error::DivisionByZero)?;
        let lead = f.coeffs[n].clone();
        let mut r = self.coeffs.clone();
        // the leading coefficient of τ^j·f is lead^{q^j}
        while r.len() > n {
            let top = r.len() - 1;
            let c = r[top].clone();
            if !self.ring.is_zero(&c) {
                let j = (top - n) as u32;
                let inv = self.ring.inv(&self.ring.twist(&lead, j)).ok_or_else(|| {
                    Error::Invalid("right division needs an invertible leading coefficient".into())
                })?;
                let b = self.ring.mul(&c, &inv);
                for (i, fi) in f.coeffs.iter().enumerate() {
                    let t = self.ring.mul(&b, &self.ring.twist(fi, j));
                    r[top - n + i] = self.ring.sub(&r[top - n + i], &t);
                }
            }
            r.pop();
        }
        Ok(Self::new(&self.ring, r))
    }

    pub fn map<S: TwistRing>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> SkewPoly<S> {
        SkewPoly::new(ring, self.coeffs.iter().map(f).collect())
    }

    pub fn to_linearized(&self) -> LinearizedPoly<R> {
        let q = self.ring.q() as u64;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| (q.pow(i as u32), c.clone()))
            .collect();
        LinearizedPoly { ring: self.ring.clone(), terms }
    }
}

/// Product in K{τ}: `(Σ a_i τ^i)(Σ b_j τ^j) = Σ a_i b_j^{q^i} τ^{i+j}`.
pub fn skew_mul<R: TwistRing>(f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>> {
    f.check(g)?;
    let ring = &f.ring;
    if f.is_zero() || g.is_zero() {
        return Ok(SkewPoly::zero(ring));
    }
    let mut out = vec![ring.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate() {
            if ring.is_zero(b) {
                continue;
            }
            let t = ring.mul(a, &ring.twist(b, i as u32));
            out[i + j] = ring.add(&out[i + j], &t);
        }
    }
    Ok(SkewPoly::new(ring, out))
}

impl<R: TwistRing> fmt::Display for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let s = self.ring.format(c);
            let s = if i > 0 && s.contains(' ') { format!("({s})") } else { s };
            match (i, s.as_str()) {
                (0, _) => f.write_str(&s)?,
                (1, "1") => f.write_str("t")?,
                (_, "1") => write!(f, "t^{i}")?,
                (1, _) => write!(f, "{s}*t")?,
                _ => write!(f, "{s}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `Σ c_i x^{e_i}` with each `e_i` a power of q.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearizedPoly<R: TwistRing> {
    pub ring: R,
    pub terms: Vec<(u64, R::Elem)>,
}

impl LinearizedPoly<ResidueField> {
    pub fn eval(&self, x: u32) -> u32 {
        let k = &self.ring;
        self.terms.iter().fold(0, |acc, (e, c)| FiniteField::add(k, acc, FiniteField::mul(k, *c, k.pow(x, *e))))
    }
}

impl LinearizedPoly<PolyRing> {
    /// Evaluation at a polynomial by plain powering.
    pub fn eval(&self, x: &PolyA) -> PolyA {
        self.terms
            .iter()
            .fold(PolyA::zero(&self.ring.0), |acc, (e, c)| &acc + &(c * &x.pow(*e)))
    }
}

impl<R: TwistRing> fmt::Display for LinearizedPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let s = self.ring.format(c);
                let x = if *e == 1 { "x".to_string() } else { format!("x^{e}") };
                if s == "1" {
                    x
                } else if s.contains(' ') {
                    format!("({s})*{x}")
                } else {
                    format!("{s}*{x}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An F_q-basis of the roots of a separable linearized polynomial, inside the
/// smallest extension of its coefficient field that contains all of them.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub ext: Arc<ExtField>,
    /// Matrix of x ↦ x^q on K' over F_q.
    pub frobenius: Matrix,
    /// Basis vectors in F_q-coordinates of K'.
    pub vectors: Vec<Vec<u32>>,
    /// Degree of K' over K.
    pub ext_degree: usize,
}

impl KernelBasis {
    /// Matrix over F_q of the linearized map `Σ c_i x^{q^i}` on K'.
    pub fn map_matrix(&self, f: &SkewPoly<ResidueField>) -> Matrix {
        linear_map_matrix(&self.ext, &self.frobenius, f)
    }
}

pub fn linear_map_matrix(ext: &ExtField, frob: &Matrix, f: &SkewPoly<ResidueField>) -> Matrix {
    let fq = ext.fq();
    let n = ext.fq_dim();
    let mut acc = Matrix::zeros(n, n);
    let mut p = Matrix::identity(n);
    for (i, c) in f.coeffs().iter().enumerate() {
        if i > 0 {
            p = frob.mul(fq, &p);
        }
        if *c != 0 {
            acc = acc.add(fq, &ext.scalar_matrix(*c).mul(fq, &p));
        }
    }
    acc
}

/// Smallest `D` with τ^{kD} ≡ 1 modulo `f` on the right, where `k = [K:F_q]`.
/// Then every root of `f` lies in the degree-`D` extension of K.
pub fn splitting_degree(f: &SkewPoly<ResidueField>, max_degree: usize) -> Result<usize> {
    let k = f.ring().degree();
    let one = SkewPoly::one(f.ring());
    let mut r = one.clone();
    for d in 1..=max_degree {
        r = r.shift(k).rem_right(f)?;
        if r == one {
            return Ok(d);
        }
    }
    Err(Error::ExtensionOverflow(max_degree))
}

/// Roots of `f` as an F_q-basis in an explicit extension of its coefficient field.
pub fn linearized_kernel(
    f: &SkewPoly<ResidueField>,
    cache: &ExtCache,
    max_degree: usize,
) -> Result<KernelBasis> {
    if f.is_zero() || f.coeff(0) == 0 {
        return Err(Error::BadReduction("linearized polynomial is inseparable".into()));
    }
    let r = f.deg().expect("nonzero");
    let d = if r == 0 { 1 } else { splitting_degree(f, max_degree)? };
    let ext = cache.get(f.ring(), d);
    let frobenius = ext.frobenius_matrix();
    let vectors = linear_map_matrix(&ext, &frobenius, f).kernel(ext.fq());
    if vectors.len() != r {
        return Err(Error::KernelDimension { expected: r, found: vectors.len() });
    }
    Ok(KernelBasis { ext, frobenius, vectors, ext_degree: d })
}
