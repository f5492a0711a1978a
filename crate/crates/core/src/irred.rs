//! Irreducibility of φ[𝔩] as an F_𝔩[G_F]-module.
//!
//! At 𝔩 = (T) the mod-T charpolys are M_c(x) = η(x) + c, and some M_c is
//! irreducible as soon as η is not a permutation of F_q.  At 𝔩 ≠ (T) a
//! one-dimensional sub or quotient would force a root ζ^{−1}𝔭̄ or ζ of every
//! P̄_𝔭 for one fixed ζ; the scan exhibits a failing prime for every ζ.

use serde::Serialize;

use crate::algebra::{poly, FiniteField, Fq, PolyA, PrimeIdeal, ResidueField};
use crate::drinfeld::{DrinfeldModule, FamilyType};
use crate::error::{Error, Result};
use crate::frobenius::{charpoly_over, frob_charpoly_deg1};

/// Default cap on deg 𝔩 for the ζ-scan.
pub const DEFAULT_SCAN_DEGREE_CAP: usize = 3;

/// Brute force: does x ↦ f(x) permute the field?
pub fn is_permutation_poly<F: FiniteField>(f: &F, coeffs: &[u32]) -> bool {
    let n = f.order() as usize;
    let mut seen = vec![false; n];
    for x in 0..n as u32 {
        let y = poly::eval(f, coeffs, x) as usize;
        if seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// A cubic `a₀ + a₁x + a₂x² + a₃x³` permutes F_q iff `a₂² = 3a₃a₁` and `q ≡ 2 (mod 3)`.
pub fn ms87_criterion(f: &Fq, coeffs: &[u32]) -> Result<bool> {
    if f.p() == 3 {
        return Err(Error::CharacteristicThree);
    }
    if coeffs.len() != 4 || coeffs[3] == 0 {
        return Err(Error::Invalid("expected a cubic".into()));
    }
    let lhs = f.mul(coeffs[2], coeffs[2]);
    let rhs = f.mul(f.from_int(3), f.mul(coeffs[3], coeffs[1]));
    Ok(lhs == rhs && f.q() % 3 == 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrredMethod {
    EtaCollision,
    ZetaScan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IrredWitness {
    EtaCollision {
        /// η, lowest degree first.
        eta: Vec<u32>,
        x1: u32,
        x2: u32,
        c: u32,
        /// M_c = η + c, root-free over F_q.
        m_c: Vec<u32>,
    },
    ZetaScan {
        primes: Vec<PrimeIdeal>,
        rows: Vec<ZetaRow>,
    },
}

/// For one ζ, the first prime whose P̄_𝔭 misses the mandated root, per scenario.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaRow {
    pub zeta: u32,
    pub a: ZetaFailure,
    pub b: ZetaFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaFailure {
    pub prime: PrimeIdeal,
    pub root: u32,
    /// P̄_𝔭(root), nonzero.
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrredCertificate {
    pub ideal: PrimeIdeal,
    pub method: IrredMethod,
    pub witness: IrredWitness,
}

fn family_eta(phi: &DrinfeldModule) -> Result<Vec<u32>> {
    match phi.family_type() {
        FamilyType::Type1 => Ok(vec![0, 1, 1, 1]),
        FamilyType::Type2 => Ok(vec![0, 0, 1, 1]),
        FamilyType::NotInFamily => Err(Error::Invalid("module is not in the family".into())),
    }
}

pub fn irred_at_t(phi: &DrinfeldModule) -> Result<IrredCertificate> {
    let f = phi.fq();
    let eta = family_eta(phi)?;
    let q = f.q();
    let vals: Vec<u32> = (0..q).map(|x| poly::eval(f, &eta, x)).collect();
    // η(0) = 0, so a second root of η is the preferred collision.
    let mut collision = (1..q).find(|&x| vals[x as usize] == 0).map(|x| (0, x));
    if collision.is_none() {
        let mut first = vec![None; q as usize];
        for (x, &y) in vals.iter().enumerate() {
            if let Some(x1) = first[y as usize] {
                collision = Some((x1, x as u32));
                break;
            }
            first[y as usize] = Some(x as u32);
        }
    }
    let (x1, x2) = collision.ok_or_else(|| Error::CertificateFailed("eta is a permutation".into()))?;
    for c in 1..q {
        let m_c = vec![c, eta[1], eta[2], eta[3]];
        if (0..q).all(|x| poly::eval(f, &m_c, x) != 0) {
            return Ok(IrredCertificate {
                ideal: PrimeIdeal::t(f),
                method: IrredMethod::EtaCollision,
                witness: IrredWitness::EtaCollision { eta, x1, x2, c, m_c },
            });
        }
    }
    Err(Error::CertificateFailed("every M_c has a root".into()))
}

fn first_failure(
    fl: &ResidueField,
    table: &[(PrimeIdeal, u32, Vec<u32>)],
    root: impl Fn(u32) -> u32,
) -> Option<ZetaFailure> {
    table.iter().find_map(|(p, pbar, cp)| {
        let r = root(*pbar);
        let v = poly::eval(fl, cp, r);
        (v != 0).then(|| ZetaFailure { prime: p.clone(), root: r, value: v })
    })
}

pub fn irred_zeta_scan(phi: &DrinfeldModule, l: &PrimeIdeal, degree_cap: usize) -> Result<IrredCertificate> {
    let f = phi.fq();
    if l.is_t() {
        return Err(Error::Invalid("zeta scan needs l != (T)".into()));
    }
    if l.degree() > degree_cap {
        return Err(Error::DegreeCap(format!("deg {} exceeds zeta-scan cap {degree_cap}", l.degree())));
    }
    let fl = ResidueField::new(l)?;
    let mut table = Vec::new();
    for c in 1..f.q() {
        let p = PrimeIdeal::linear(f, c);
        if &p == l {
            continue;
        }
        let cp = charpoly_over(&frob_charpoly_deg1(phi, c)?, &fl);
        table.push((p.clone(), fl.from_poly(p.generator()), cp));
    }
    if table.len() < 3 {
        return Err(Error::TooFewPrimes(table.len()));
    }
    let mut rows = Vec::new();
    for zeta in fl.units() {
        let zi = fl.inv(zeta).expect("unit");
        let a = first_failure(&fl, &table, |pbar| fl.mul(zi, pbar));
        let b = first_failure(&fl, &table, |_| zeta);
        match (a, b) {
            (Some(a), Some(b)) => rows.push(ZetaRow { zeta, a, b }),
            _ => {
                return Err(Error::CertificateFailed(format!(
                    "zeta = {} gives a consistent factorization mod {l}",
                    fl.format_elem(zeta)
                )))
            }
        }
    }
    Ok(IrredCertificate {
        ideal: l.clone(),
        method: IrredMethod::ZetaScan,
        witness: IrredWitness::ZetaScan { primes: table.into_iter().map(|t| t.0).collect(), rows },
    })
}

/// Irreducibility certificate for any 𝔩, dispatching on 𝔩 = (T).
pub fn irred_certificate(phi: &DrinfeldModule, l: &PrimeIdeal, degree_cap: usize) -> Result<IrredCertificate> {
    if l.is_t() {
        irred_at_t(phi)
    } else {
        irred_zeta_scan(phi, l, degree_cap)
    }
}

impl IrredCertificate {
    /// Re-evaluates every recorded witness.
    pub fn verify(&self, phi: &DrinfeldModule) -> Result<bool> {
        let f = phi.fq();
        match &self.witness {
            IrredWitness::EtaCollision { eta, x1, x2, c, m_c } => {
                let mc = PolyA::new(f, m_c.clone());
                Ok(x1 != x2
                    && poly::eval(f, eta, *x1) == poly::eval(f, eta, *x2)
                    && *c != 0
                    && mc.deg() == Some(3)
                    && mc.is_irreducible()?)
            }
            IrredWitness::ZetaScan { rows, .. } => {
                let fl = ResidueField::new(&self.ideal)?;
                if rows.len() as u32 != fl.order() - 1 {
                    return Ok(false);
                }
                for row in rows {
                    for (fail, scenario_a) in [(&row.a, true), (&row.b, false)] {
                        let c = fail.prime.linear_root().ok_or(Error::Invalid("nonlinear prime".into()))?;
                        let cp = charpoly_over(&frob_charpoly_deg1(phi, c)?, &fl);
                        let expect = if scenario_a {
                            fl.mul(fl.inv(row.zeta).expect("unit"), fl.from_poly(fail.prime.generator()))
                        } else {
                            row.zeta
                        };
                        let v = poly::eval(&fl, &cp, fail.root);
                        if fail.root != expect || v == 0 || v != fail.value {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_examples() {
        let f5 = Fq::of_order(5).unwrap();
        let f7 = Fq::of_order(7).unwrap();
        assert!(is_permutation_poly(&f5, &[0, 0, 0, 1]));
        assert!(!is_permutation_poly(&f7, &[0, 1, 1, 1]));
        for q in [5, 7, 9, 11] {
            assert!(!is_permutation_poly(&Fq::of_order(q).unwrap(), &[0, 0, 1, 1]));
        }
        assert!(!ms87_criterion(&f7, &[0, 1, 1, 1]).unwrap());
        assert!(ms87_criterion(&f5, &[0, 0, 0, 1]).unwrap());
        assert!(!ms87_criterion(&f7, &[0, 0, 0, 1]).unwrap());
        assert_eq!(ms87_criterion(&Fq::of_order(9).unwrap(), &[0, 0, 0, 1]), Err(Error::CharacteristicThree));
    }

    #[test]
    fn eta_collision_examples() {
        let f = Fq::of_order(7).unwrap();
        let t2 = DrinfeldModule::family(&PolyA::zero(&f), &PolyA::one(&f));
        let cert = irred_at_t(&t2).unwrap();
        let IrredWitness::EtaCollision { x1, x2, .. } = cert.witness else { panic!() };
        assert_eq!((x1, x2), (0, 6));
        assert!(cert.verify(&t2).unwrap());
        let t1 = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        assert!(irred_at_t(&t1).unwrap().verify(&t1).unwrap());
    }

    #[test]
    fn char_three_type1_collision() {
        let f = Fq::of_order(9).unwrap();
        let t1 = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let IrredWitness::EtaCollision { x1, x2, .. } = irred_at_t(&t1).unwrap().witness else { panic!() };
        assert_eq!((x1, x2), (0, 1));
    }

    #[test]
    fn zeta_scan_examples() {
        let f = Fq::of_order(7).unwrap();
        let t1 = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let t2 = DrinfeldModule::family(&PolyA::zero(&f), &PolyA::one(&f));
        let cert = irred_zeta_scan(&t1, &PrimeIdeal::linear(&f, 3), 3).unwrap();
        let IrredWitness::ZetaScan { ref rows, ref primes } = cert.witness else { panic!() };
        assert_eq!((rows.len(), primes.len()), (6, 5));
        assert!(cert.verify(&t1).unwrap());
        let l2 = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        let cert = irred_zeta_scan(&t2, &l2, 3).unwrap();
        let IrredWitness::ZetaScan { ref rows, .. } = cert.witness else { panic!() };
        assert_eq!(rows.len(), 48);
        assert!(cert.verify(&t2).unwrap());
        assert!(matches!(irred_zeta_scan(&t2, &l2, 1), Err(Error::DegreeCap(_))));
    }
}
