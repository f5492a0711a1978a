//! Class-by-class exclusion of maximal subgroups of GL₃(F_{q'}) not containing
//! SL₃, from order divisibility and three structural facts.

use serde::Serialize;

use super::orders::{go3_order, gu3_order, s_class_orders, square_root_order, GroupOrder};
use crate::algebra::field::{is_prime, prime_power};
use crate::error::{Error, Result};

/// What is known about a putative maximal subgroup M ⊇ image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SieveEvidence {
    pub q_prime: u64,
    pub irreducible: bool,
    /// A number known to divide |M ∩ SL₃|, normally q'².
    pub divisor: u128,
    pub det_full: bool,
    pub center_contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ClassResult {
    Excluded { reason: String },
    NotApplicable { reason: String },
    Failed { reason: String },
}

impl ClassResult {
    pub fn is_failed(&self) -> bool {
        matches!(self, ClassResult::Failed { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClassResult::Excluded { .. } => "excluded",
            ClassResult::NotApplicable { .. } => "not-applicable",
            ClassResult::Failed { .. } => "FAILED",
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            ClassResult::Excluded { reason } | ClassResult::NotApplicable { reason } | ClassResult::Failed { reason } => {
                reason
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: String,
    pub result: ClassResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveVerdict {
    pub evidence: SieveEvidence,
    pub classes: Vec<ClassVerdict>,
}

impl SieveVerdict {
    pub fn surjective(&self) -> bool {
        self.classes.iter().all(|c| !c.result.is_failed())
    }

    pub fn class(&self, name: &str) -> Option<&ClassResult> {
        self.classes.iter().find(|c| c.class == name).map(|c| &c.result)
    }

    pub fn to_table(&self) -> String {
        self.classes.iter().map(|c| format!("{:<3} {:<15} {}\n", c.class, c.result.label(), c.result.reason())).collect()
    }
}

fn by_order(divisor: u128, name: &str, order: &GroupOrder) -> ClassResult {
    if order.divisible_by(divisor) {
        ClassResult::Failed { reason: format!("{divisor} divides |{name}| = {}", order.value) }
    } else {
        ClassResult::Excluded { reason: format!("{divisor} does not divide |{name}| = {}", order.value) }
    }
}

/// Combine sub-checks: any failure fails, else any exclusion excludes.
fn combine(parts: Vec<ClassResult>, empty: &str) -> ClassResult {
    if let Some(f) = parts.iter().find(|p| p.is_failed()) {
        return f.clone();
    }
    let reasons: Vec<&str> =
        parts.iter().filter(|p| matches!(p, ClassResult::Excluded { .. })).map(|p| p.reason()).collect();
    if reasons.is_empty() {
        ClassResult::NotApplicable { reason: empty.to_string() }
    } else {
        ClassResult::Excluded { reason: reasons.join("; ") }
    }
}

pub fn aschbacher_sieve(ev: &SieveEvidence) -> Result<SieveVerdict> {
    let q1 = ev.q_prime;
    let (p, f) = prime_power(q1).ok_or_else(|| Error::InvalidField(format!("{q1} is not a prime power")))?;
    let q = q1 as u128;
    let d = ev.divisor;
    let mut classes = Vec::new();
    let mut push = |name: &str, r: ClassResult| classes.push(ClassVerdict { class: name.to_string(), result: r });

    push(
        "C1",
        if ev.irreducible {
            ClassResult::Excluded { reason: "the action is irreducible".into() }
        } else {
            ClassResult::Failed { reason: "irreducibility not established".into() }
        },
    );
    push("C2", by_order(d, "GL1 wr S3", &GroupOrder::product(&[q - 1, q - 1, q - 1, 6])));
    push("C3", by_order(d, "GL1(q'^3)", &GroupOrder::product(&[q * q * q - 1])));
    push("C4", ClassResult::NotApplicable { reason: "3 has no tensor decomposition".into() });

    let mut c5 = Vec::new();
    for k in 2..=f {
        if f % k != 0 {
            continue;
        }
        let q0 = (p as u128).pow(f / k);
        let o = GroupOrder::product(&[q0 * q0 * q0, q - 1, q0 * q0 * q0 - 1, q0 * q0 - 1]);
        c5.push(by_order(d, &format!("<Z, GL3({q0})>"), &o));
    }
    push("C5", combine(c5, "no proper subfield"));

    push(
        "C6",
        if is_prime(q1) && q1 % 3 == 1 {
            by_order(d, "3^(1+2).Sp2(3)", &GroupOrder::product(&[8, 81]))
        } else {
            ClassResult::NotApplicable { reason: "q' is not a prime congruent to 1 mod 3".into() }
        },
    );
    push("C7", ClassResult::NotApplicable { reason: "3 is not a proper power".into() });

    let mut c8 = Vec::new();
    if let Some(r) = square_root_order(q1) {
        c8.push(by_order(d, &format!("GU3({r})"), &gu3_order(r)));
    }
    c8.push(by_order(d, &format!("GO3({q1})"), &go3_order(q1)));
    push("C8", combine(c8, "no classical form"));

    let s = if !ev.center_contained || !ev.det_full {
        ClassResult::Failed { reason: "center containment or full determinant not established".into() }
    } else {
        combine(s_class_orders().iter().map(|(n, o)| by_order(d, n, o)).collect(), "no candidates")
    };
    push("S", s);
    Ok(SieveVerdict { evidence: *ev, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(q_prime: u64) -> SieveEvidence {
        SieveEvidence {
            q_prime,
            irreducible: true,
            divisor: (q_prime as u128).pow(2),
            det_full: true,
            center_contained: true,
        }
    }

    #[test]
    fn family_cases() {
        for q in [7, 9, 11, 13, 25, 49, 343, 121] {
            let v = aschbacher_sieve(&ev(q)).unwrap();
            assert!(v.surjective(), "q' = {q}\n{}", v.to_table());
            assert_eq!(v.classes.len(), 9);
        }
        let v = aschbacher_sieve(&ev(49)).unwrap();
        assert!(matches!(v.class("C5"), Some(ClassResult::Excluded { .. })));
        assert!(matches!(v.class("C6"), Some(ClassResult::NotApplicable { .. })));
        let v = aschbacher_sieve(&ev(7)).unwrap();
        assert!(matches!(v.class("C6"), Some(ClassResult::Excluded { .. })));
    }

    #[test]
    fn weak_evidence_fails() {
        let mut e = ev(7);
        e.divisor = 1;
        let v = aschbacher_sieve(&e).unwrap();
        assert!(v.class("C2").unwrap().is_failed());
        assert!(!v.surjective());
        let mut e = ev(7);
        e.center_contained = false;
        assert!(aschbacher_sieve(&e).unwrap().class("S").unwrap().is_failed());
    }
}
