//! Drinfeld F_q[T]-modules given by φ_T, the two-parameter rank-3 family
//! φ_T = T + g₁^{q−1}τ + g₂^{q−1}τ² + T^{q−1}τ³, and their reductions.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Fq, PolyA, PrimeIdeal, ResidueField};
use crate::error::{Error, Result};
use crate::skew::{skew_mul, PolyRing, SkewPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyType {
    Type1,
    Type2,
    NotInFamily,
}

impl fmt::Display for FamilyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyType::Type1 => "Type1",
            FamilyType::Type2 => "Type2",
            FamilyType::NotInFamily => "NotInFamily",
        })
    }
}

/// Membership verdict with the gcds against T^q − T that decide it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub tag: FamilyType,
    pub gcd_g1: PolyA,
    pub gcd_g2: PolyA,
}

pub fn classify_family(g1: &PolyA, g2: &PolyA) -> FamilyClass {
    let f = g1.field();
    let tq = PolyA::t_q_minus_t(f);
    let gcd_g1 = g1.gcd(&tq).expect("T^q - T is nonzero");
    let gcd_g2 = g2.gcd(&tq).expect("T^q - T is nonzero");
    let tag = if !gcd_g2.is_one() {
        FamilyType::NotInFamily
    } else if gcd_g1 == PolyA::t(f) {
        FamilyType::Type1
    } else if gcd_g1 == tq {
        FamilyType::Type2
    } else {
        FamilyType::NotInFamily
    };
    FamilyClass { tag, gcd_g1, gcd_g2 }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub g1: PolyA,
    pub g2: PolyA,
}

#[derive(Clone, Debug)]
pub struct DrinfeldModule {
    ring: PolyRing,
    phi_t: SkewPoly<PolyRing>,
    params: Option<FamilyParams>,
}

/// Header entry for reports.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleDescriptor {
    pub q: u32,
    pub p: u32,
    pub fq_modulus: Vec<u32>,
    pub g1: Option<String>,
    pub g2: Option<String>,
    pub family_type: Option<FamilyType>,
    pub phi_t: String,
}

impl DrinfeldModule {
    pub fn family(g1: &PolyA, g2: &PolyA) -> Self {
        let fq = g1.field();
        assert!(fq.same_field(g2.field()), "g1 and g2 over different fields");
        let q1 = fq.q() as u64 - 1;
        let ring = PolyRing(fq.clone());
        let coeffs = vec![PolyA::t(fq), g1.pow(q1), g2.pow(q1), PolyA::t(fq).pow(q1)];
        DrinfeldModule {
            phi_t: SkewPoly::new(&ring, coeffs),
            ring,
            params: Some(FamilyParams { g1: g1.clone(), g2: g2.clone() }),
        }
    }

    /// The Carlitz module C_T = T + τ.
    pub fn carlitz(fq: &Fq) -> Self {
        Self::from_coefficients(fq, vec![PolyA::t(fq), PolyA::one(fq)]).expect("valid")
    }

    /// φ_T = Σ Δ_i τ^i; requires Δ_0 = T and a nonzero top coefficient.
    pub fn from_coefficients(fq: &Fq, coeffs: Vec<PolyA>) -> Result<Self> {
        let ring = PolyRing(fq.clone());
        let phi_t = SkewPoly::new(&ring, coeffs);
        if phi_t.coeff(0) != PolyA::t(fq) {
            return Err(Error::Invalid("constant term of phi_T must be T".into()));
        }
        if phi_t.deg().unwrap_or(0) == 0 {
            return Err(Error::Invalid("phi_T must have positive tau-degree".into()));
        }
        Ok(DrinfeldModule { ring, phi_t, params: None })
    }

    pub fn fq(&self) -> &Fq {
        &self.ring.0
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.phi_t.deg().expect("nonzero")
    }

    pub fn phi_t(&self) -> &SkewPoly<PolyRing> {
        &self.phi_t
    }

    pub fn params(&self) -> Option<&FamilyParams> {
        self.params.as_ref()
    }

    pub fn classify(&self) -> Option<FamilyClass> {
        self.params.as_ref().map(|p| classify_family(&p.g1, &p.g2))
    }

    pub fn family_type(&self) -> FamilyType {
        self.classify().map_or(FamilyType::NotInFamily, |c| c.tag)
    }

    /// φ_a by Horner's rule in T: φ_a = c₀ + φ_T·(c₁ + φ_T·(…)).
    pub fn phi_of(&self, a: &PolyA) -> SkewPoly<PolyRing> {
        let f = self.fq();
        let mut acc = SkewPoly::zero(&self.ring);
        for &c in a.coeffs().iter().rev() {
            acc = skew_mul(&self.phi_t, &acc).expect("same ring");
            acc = acc.add(&SkewPoly::constant(&self.ring, PolyA::constant(f, c))).expect("same ring");
        }
        acc
    }

    pub fn reduce_at(&self, p: &PrimeIdeal) -> Result<ReducedModule> {
        let field = ResidueField::new(p)?;
        let psi_t = self.phi_t.map(&field, |c| match p.linear_root() {
            Some(r) => c.eval(r),
            None => field.from_poly(c),
        });
        let r = self.rank();
        let reduction = match psi_t.deg() {
            Some(d) if d == r => ReductionType::Good,
            Some(d) if d >= 1 => ReductionType::Stable { rank: d },
            _ => ReductionType::Other,
        };
        Ok(ReducedModule { prime: p.clone(), field, psi_t, reduction })
    }

    pub fn descriptor(&self) -> ModuleDescriptor {
        let fq = self.fq();
        ModuleDescriptor {
            q: fq.q(),
            p: fq.p(),
            fq_modulus: fq.spec().modulus.clone(),
            g1: self.params.as_ref().map(|p| p.g1.to_string()),
            g2: self.params.as_ref().map(|p| p.g2.to_string()),
            family_type: self.classify().map(|c| c.tag),
            phi_t: self.phi_t.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReductionType {
    Good,
    /// The top coefficient vanishes; `rank` is the τ-degree that survives.
    Stable { rank: usize },
    Other,
}

/// φ ⊗ F_𝔭: the coefficients of φ_T reduced modulo 𝔭.
#[derive(Clone, Debug)]
pub struct ReducedModule {
    pub prime: PrimeIdeal,
    pub field: ResidueField,
    pub psi_t: SkewPoly<ResidueField>,
    pub reduction: ReductionType,
}

impl ReducedModule {
    pub fn is_good(&self) -> bool {
        self.reduction == ReductionType::Good
    }

    pub fn rank(&self) -> usize {
        self.psi_t.deg().unwrap_or(0)
    }

    /// ψ_a over F_𝔭, by Horner's rule.
    pub fn psi_of(&self, a: &PolyA) -> SkewPoly<ResidueField> {
        let mut acc = SkewPoly::zero(&self.field);
        for &c in a.coeffs().iter().rev() {
            acc = skew_mul(&self.psi_t, &acc).expect("same ring");
            acc = acc.add(&SkewPoly::constant(&self.field, c)).expect("same ring");
        }
        acc
    }
}

/// Class of the monic generator of 𝔭 in (A/𝔞)^×, the Carlitz Frobenius.
pub fn carlitz_frobenius(p: &PrimeIdeal, a: &PolyA) -> Result<PolyA> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if p.generator().divides(a) {
        return Err(Error::Ramified(format!("{p} divides {a}")));
    }
    Ok(p.generator().rem(&a.monic()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn f7() -> Fq {
        Fq::of_order(7).unwrap()
    }

    #[test]
    fn classification_examples() {
        let f = f7();
        let p = |s: &str| parse_poly(&f, s).unwrap();
        assert_eq!(classify_family(&p("0"), &p("1")).tag, FamilyType::Type2);
        assert_eq!(classify_family(&p("T"), &p("1")).tag, FamilyType::Type1);
        assert_eq!(classify_family(&p("T^2"), &p("T")).tag, FamilyType::NotInFamily);
        assert_eq!(classify_family(&p("T^7 - T"), &p("T^2 + 1")).tag, FamilyType::Type2);
        assert_eq!(classify_family(&p("T - 1"), &p("1")).tag, FamilyType::NotInFamily);
    }

    #[test]
    fn reduction_types() {
        let f = f7();
        let phi = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let at_t = phi.reduce_at(&PrimeIdeal::t(&f)).unwrap();
        assert_eq!(at_t.reduction, ReductionType::Stable { rank: 2 });
        for c in 1..7 {
            let r = phi.reduce_at(&PrimeIdeal::linear(&f, c)).unwrap();
            assert!(r.is_good());
            assert_eq!(r.psi_t.coeffs(), &[c, 1, 1, 1]);
        }
        let carlitz = DrinfeldModule::carlitz(&f);
        for p in crate::algebra::enum_primes(&f, 2, &[]) {
            assert!(carlitz.reduce_at(&p).unwrap().is_good());
        }
    }

    #[test]
    fn carlitz_frobenius_examples() {
        let f = f7();
        let p = PrimeIdeal::linear(&f, 3);
        assert_eq!(carlitz_frobenius(&p, &PolyA::linear(&f, 1)).unwrap(), PolyA::constant(&f, 5));
        let a = &PolyA::linear(&f, 1) * &PolyA::linear(&f, 2);
        let cls = carlitz_frobenius(&p, &a).unwrap();
        let ring = crate::algebra::QuotientRing::new(&a).unwrap();
        for ((l, _), c) in ring.factors().iter().zip(ring.crt_components(&cls)) {
            // (T − 3) at T = 1 is 5, at T = 2 is 6
            let expect = if l.linear_root() == Some(1) { 5 } else { 6 };
            assert_eq!(c, PolyA::constant(&f, expect));
        }
        let t = PrimeIdeal::t(&f);
        let m = parse_poly(&f, "T^2 + 1").unwrap();
        assert_eq!(carlitz_frobenius(&t, &m).unwrap(), PolyA::t(&f));
        assert!(matches!(carlitz_frobenius(&p, &(&a * p.generator())), Err(Error::Ramified(_))));
    }
}
