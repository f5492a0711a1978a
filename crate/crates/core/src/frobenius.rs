//! Characteristic polynomials of Frobenius for φ ⊗ F_𝔭.
//!
//! Three routes: the closed form of the family at degree-one primes, a linear
//! solve of P(π) = 0 in F_𝔭{τ} with π = τ^{deg 𝔭}, and an independent oracle
//! acting by x ↦ x^{|F_𝔭|} on an explicit basis of the 𝔩-torsion.

use std::fmt;

use serde::Serialize;

use crate::algebra::{
    ExtCache, FiniteField, Matrix, PolyA, PrimeIdeal, QuotientRing, ResidueField, Solution,
};
use crate::drinfeld::{DrinfeldModule, ReducedModule};
use crate::error::{Error, Result};
use crate::skew::{linear_map_matrix, linearized_kernel, SkewPoly};

/// Default cap on the degree of the extension holding the torsion.
pub const DEFAULT_MAX_EXT_DEGREE: usize = 4096;

/// `P(x) = x^r + a_1 x^{r−1} + … + a_{r−1} x + (−1)^r μ·𝔭`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobCharPoly {
    pub prime: PrimeIdeal,
    /// `a_1, …, a_{r−1}`.
    pub a: Vec<PolyA>,
    pub mu: u32,
}

impl FrobCharPoly {
    pub fn rank(&self) -> usize {
        self.a.len() + 1
    }

    pub fn a1(&self) -> Option<&PolyA> {
        self.a.first()
    }

    pub fn a2(&self) -> Option<&PolyA> {
        self.a.get(1)
    }

    /// The determinant μ·𝔭.
    pub fn det(&self) -> PolyA {
        self.prime.generator().scale(self.mu)
    }

    pub fn constant(&self) -> PolyA {
        let d = self.det();
        if self.rank() % 2 == 0 { d } else { -&d }
    }

    /// Coefficients lowest degree first, leading 1 included.
    pub fn coefficients(&self) -> Vec<PolyA> {
        let f = self.prime.field();
        let mut v = vec![self.constant()];
        v.extend(self.a.iter().rev().cloned());
        v.push(PolyA::one(f));
        v
    }
}

impl fmt::Display for FrobCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.coefficients();
        let r = cs.len() - 1;
        let mut parts = Vec::new();
        for (i, c) in cs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let x = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let s = c.to_string();
            parts.push(match (i, c.is_one()) {
                (0, _) => format!("({s})"),
                (_, true) => x,
                _ if i == r => x,
                _ => format!("({s})*{x}"),
            });
        }
        f.write_str(&parts.join(" + "))
    }
}

/// The family's charpoly at 𝔭 = (T − c): `x³ + x² + g₁(c)^{q−1} x − (T − c)`.
pub fn frob_charpoly_deg1(phi: &DrinfeldModule, c: u32) -> Result<FrobCharPoly> {
    let params = phi
        .params()
        .ok_or_else(|| Error::Invalid("closed form applies to family members only".into()))?;
    let f = phi.fq();
    if c == 0 {
        return Err(Error::BadReduction("(T) is a prime of bad reduction".into()));
    }
    let a2 = f.pow(params.g1.eval(c), f.q() as u64 - 1);
    Ok(FrobCharPoly {
        prime: PrimeIdeal::linear(f, c),
        a: vec![PolyA::one(f), PolyA::constant(f, a2)],
        mu: 1,
    })
}

fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Solves `π^r + Σ ψ_{a_i} π^{r−i} + (−1)^r μ ψ_𝔭 = 0` for the F_q-coefficients of
/// the `a_i` (degree ≤ ⌈i·d/r⌉) and μ.
pub fn frob_charpoly_solve(psi: &ReducedModule) -> Result<FrobCharPoly> {
    if !psi.is_good() {
        return Err(Error::BadReduction(format!("reduction at {} is not good", psi.prime)));
    }
    let k = &psi.field;
    let f = k.base();
    let r = psi.rank();
    let d = psi.prime.degree();
    let kd = k.degree();
    let len = d * r + r + 1;
    let flatten = |s: &SkewPoly<ResidueField>, shift: usize| -> Vec<u32> {
        let mut v = vec![0u32; len * kd];
        for (i, &c) in s.coeffs().iter().enumerate() {
            v[(i + shift) * kd..(i + shift + 1) * kd].copy_from_slice(&k.digits(c));
        }
        v
    };

    let bounds: Vec<usize> = (1..r).map(|i| div_ceil(i * d, r)).collect();
    let max_b = bounds.iter().copied().max().unwrap_or(0);
    let t = PolyA::t(f);
    let psi_pows: Vec<SkewPoly<ResidueField>> = (0..=max_b).map(|j| psi.psi_of(&t.pow(j as u64))).collect();

    let mut cols = Vec::new();
    for (i, &b) in bounds.iter().enumerate() {
        let shift = d * (r - (i + 1));
        for pj in psi_pows.iter().take(b + 1) {
            cols.push(flatten(pj, shift));
        }
    }
    let mut last = flatten(&psi.psi_of(psi.prime.generator()), 0);
    if r % 2 == 1 {
        last = last.iter().map(|&x| f.neg(x)).collect();
    }
    cols.push(last);
    let m = Matrix::from_columns(&cols);
    let mut rhs = vec![0u32; len * kd];
    rhs[d * r * kd] = f.neg(1);

    let sol = match m.solve(f, &rhs) {
        Solution::Unique(x) => x,
        Solution::Underdetermined(n) => {
            return Err(Error::DegenerateCharpoly(format!("{n}-dimensional solution space at {}", psi.prime)))
        }
        Solution::Inconsistent => {
            return Err(Error::DegenerateCharpoly(format!("inconsistent system at {}", psi.prime)))
        }
    };
    let mut pos = 0;
    let mut a = Vec::new();
    for &b in &bounds {
        a.push(PolyA::new(f, sol[pos..pos + b + 1].to_vec()));
        pos += b + 1;
    }
    let mu = sol[pos];
    if mu == 0 {
        return Err(Error::DegenerateCharpoly(format!("zero determinant unit at {}", psi.prime)));
    }
    Ok(FrobCharPoly { prime: psi.prime.clone(), a, mu })
}

/// Frobenius acting on a basis of ψ[𝔩], as a matrix over F_𝔩.
#[derive(Clone, Debug)]
pub struct FrobMatrix {
    pub field: ResidueField,
    pub matrix: Matrix,
    /// Degree over F_𝔭 of the field holding the torsion.
    pub ext_degree: usize,
    /// F_𝔩-basis vectors, in F_q-coordinates of that field.
    pub basis: Vec<Vec<u32>>,
}

impl FrobMatrix {
    pub fn charpoly(&self) -> Vec<u32> {
        self.matrix.charpoly(&self.field)
    }

    pub fn det(&self) -> u32 {
        self.matrix.det(&self.field)
    }
}

pub fn frob_matrix_oracle(
    psi: &ReducedModule,
    l: &PrimeIdeal,
    cache: &ExtCache,
    max_ext_degree: usize,
) -> Result<FrobMatrix> {
    if !psi.is_good() {
        return Err(Error::BadReduction(format!("reduction at {} is not good", psi.prime)));
    }
    if l == &psi.prime {
        return Err(Error::Invalid("oracle needs l != p".into()));
    }
    let r = psi.rank();
    let dl = l.degree();
    let fl = ResidueField::new(l)?;
    let kb = linearized_kernel(&psi.psi_of(l.generator()), cache, max_ext_degree)?;
    if kb.vectors.len() != r * dl {
        return Err(Error::KernelDimension { expected: r * dl, found: kb.vectors.len() });
    }
    let fq = kb.ext.fq().clone();
    let t = PolyA::t(&fq);
    let t_maps: Vec<Matrix> =
        (0..dl).map(|s| linear_map_matrix(&kb.ext, &kb.frobenius, &psi.psi_of(&t.pow(s as u64)))).collect();

    // Greedy F_𝔩-basis: each new vector brings its block {ψ_{T^s} v}.
    let mut basis = Vec::new();
    let mut span: Vec<Vec<u32>> = Vec::new();
    for w in &kb.vectors {
        if basis.len() == r {
            break;
        }
        let mut trial = span.clone();
        trial.push(w.clone());
        if Matrix::from_columns(&trial).rank(&fq) == trial.len() {
            basis.push(w.clone());
            span.extend(t_maps.iter().map(|m| m.mul_vec(&fq, w)));
        }
    }
    let bmat = Matrix::from_columns(&span);
    if basis.len() != r || bmat.rank(&fq) != r * dl {
        return Err(Error::KernelDimension { expected: r, found: basis.len() });
    }

    let mut frob = Matrix::identity(kb.ext.fq_dim());
    for _ in 0..psi.prime.degree() {
        frob = kb.frobenius.mul(&fq, &frob);
    }
    let mut matrix = Matrix::zeros(r, r);
    for (i, v) in basis.iter().enumerate() {
        let img = frob.mul_vec(&fq, v);
        let Solution::Unique(c) = bmat.solve(&fq, &img) else {
            return Err(Error::Invalid("Frobenius image outside the torsion".into()));
        };
        for j in 0..r {
            matrix.set(j, i, fl.from_digits(&c[j * dl..(j + 1) * dl]));
        }
    }
    Ok(FrobMatrix { field: fl, matrix, ext_degree: kb.ext_degree, basis })
}

/// `P mod 𝔞` with trace and determinant functionals.
#[derive(Clone, Debug, Serialize)]
pub struct CharPolyMod {
    pub modulus: PolyA,
    /// Lowest degree first, monic.
    pub coeffs: Vec<PolyA>,
    pub trace: PolyA,
    pub det: PolyA,
    /// `tr^r / det`; with r = 3 this is tr³/det.
    pub tr_pow_over_det: Option<PolyA>,
    pub det_over_tr_pow: Option<PolyA>,
}

pub fn charpoly_mod(p: &FrobCharPoly, a: &PolyA) -> Result<CharPolyMod> {
    let ring = QuotientRing::new(a)?;
    let coeffs: Vec<PolyA> = p.coefficients().iter().map(|c| ring.reduce(c)).collect();
    let a1 = p.a1().cloned().unwrap_or_else(|| PolyA::zero(p.prime.field()));
    let trace = ring.reduce(&-&a1);
    let det = ring.reduce(&p.det());
    let trp = ring.pow(&trace, p.rank() as u64);
    let tr_pow_over_det = ring.inv(&det).map(|di| ring.mul(&trp, &di));
    let det_over_tr_pow = ring.inv(&trp).map(|ti| ring.mul(&det, &ti));
    Ok(CharPolyMod { modulus: ring.modulus().clone(), coeffs, trace, det, tr_pow_over_det, det_over_tr_pow })
}

/// Coefficients of `P` in F_𝔩, lowest first.
pub fn charpoly_over(p: &FrobCharPoly, fl: &ResidueField) -> Vec<u32> {
    p.coefficients().iter().map(|c| fl.from_poly(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enum_primes, Fq};

    #[test]
    fn closed_form_examples() {
        let f = Fq::of_order(7).unwrap();
        let t1 = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let t2 = DrinfeldModule::family(&PolyA::zero(&f), &PolyA::one(&f));
        let p1 = frob_charpoly_deg1(&t1, 2).unwrap();
        assert_eq!(p1.a, vec![PolyA::one(&f), PolyA::one(&f)]);
        assert_eq!(p1.constant(), -&PolyA::linear(&f, 2));
        let p2 = frob_charpoly_deg1(&t2, 2).unwrap();
        assert!(p2.a[1].is_zero());
        assert!(frob_charpoly_deg1(&t1, 0).is_err());
        let m = charpoly_mod(&p1, &PolyA::t(&f)).unwrap();
        let cs: Vec<u32> = m.coeffs.iter().map(|c| c.coeff(0)).collect();
        assert_eq!(cs, vec![2, 1, 1, 1]);
    }

    #[test]
    fn solver_matches_closed_form_q7() {
        let f = Fq::of_order(7).unwrap();
        for (g1, g2) in [("T", "1"), ("0", "1"), ("T^2 + T", "T^2 + 1")] {
            let g1 = crate::algebra::parse_poly(&f, g1).unwrap();
            let g2 = crate::algebra::parse_poly(&f, g2).unwrap();
            let phi = DrinfeldModule::family(&g1, &g2);
            for c in 1..7 {
                let psi = phi.reduce_at(&PrimeIdeal::linear(&f, c)).unwrap();
                assert_eq!(frob_charpoly_solve(&psi).unwrap(), frob_charpoly_deg1(&phi, c).unwrap());
            }
        }
    }

    #[test]
    fn carlitz_rank_one_is_hayes() {
        let f = Fq::of_order(5).unwrap();
        let c = DrinfeldModule::carlitz(&f);
        for p in enum_primes(&f, 3, &[]) {
            let cp = frob_charpoly_solve(&c.reduce_at(&p).unwrap()).unwrap();
            // P(x) = x − 𝔭
            assert!(cp.a.is_empty());
            assert_eq!(cp.mu, 1, "at {p}");
        }
    }

    #[test]
    fn oracle_carlitz_scalar() {
        let f = Fq::of_order(5).unwrap();
        let c = DrinfeldModule::carlitz(&f);
        let cache = ExtCache::new();
        for p in enum_primes(&f, 2, &[]) {
            for l in enum_primes(&f, 1, &[]) {
                if l == p {
                    continue;
                }
                let fm = frob_matrix_oracle(&c.reduce_at(&p).unwrap(), &l, &cache, 1000).unwrap();
                assert_eq!(fm.matrix.data, vec![fm.field.from_poly(p.generator())]);
            }
        }
    }

    fn check_oracle(phi: &DrinfeldModule, p: &PrimeIdeal, ls: &[PrimeIdeal], cache: &ExtCache) {
        let psi = phi.reduce_at(p).unwrap();
        let cp = frob_charpoly_solve(&psi).unwrap();
        for l in ls {
            if l == p {
                continue;
            }
            let fm = frob_matrix_oracle(&psi, l, cache, 1000).unwrap();
            assert_eq!(fm.charpoly(), charpoly_over(&cp, &fm.field), "p = {p}, l = {l}");
            assert_eq!(fm.det(), fm.field.from_poly(&cp.det()));
        }
    }

    #[test]
    fn oracle_matches_solver_degree_one() {
        let f = Fq::of_order(7).unwrap();
        let cache = ExtCache::new();
        let ls = enum_primes(&f, 1, &[]);
        for g1 in [PolyA::t(&f), PolyA::zero(&f)] {
            let phi = DrinfeldModule::family(&g1, &PolyA::one(&f));
            for c in 1..7 {
                check_oracle(&phi, &PrimeIdeal::linear(&f, c), &ls, &cache);
            }
        }
    }

    #[test]
    fn degree_two_prime_type2() {
        let f = Fq::of_order(7).unwrap();
        let cache = ExtCache::new();
        let phi = DrinfeldModule::family(&PolyA::zero(&f), &PolyA::one(&f));
        let p = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        let cp = frob_charpoly_solve(&phi.reduce_at(&p).unwrap()).unwrap();
        assert!(cp.a[0].deg().unwrap_or(0) <= 1 && cp.a[1].deg().unwrap_or(0) <= 2);
        check_oracle(&phi, &p, &[PrimeIdeal::linear(&f, 1), PrimeIdeal::linear(&f, 2)], &cache);
    }
}
