//! Per-prime surjectivity certificates and the batch report.
//!
//! Each certificate is a list of checks.  A check is either computed here
//! ("verified" or "failed") or rests on a published result ("cited").  A
//! verdict is surjective only when no check failed.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{enum_primes, parse_poly, parse_prime_poly, FieldSpec, Fq, PolyA, PrimeIdeal, QuotientRing};
use crate::drinfeld::{DrinfeldModule, FamilyType, ModuleDescriptor};
use crate::error::{Error, Result};
use crate::frobenius::{charpoly_mod, charpoly_over, frob_charpoly_solve, FrobCharPoly};
use crate::gl3::{aschbacher_sieve, coset_trace_test, inverse_charpoly, subring_generated, CosetOutcome, SieveEvidence};
use crate::irred::irred_certificate;
use crate::valuation::{inertia_order, nonscalar_witness_at_t};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Verified,
    Cited,
    Failed,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub paper_anchor: String,
    pub data: Value,
}

impl Check {
    fn new(name: &str, status: CheckStatus, anchor: &str, data: Value) -> Self {
        Check { name: name.into(), status, paper_anchor: anchor.into(), data }
    }

    fn computed(name: &str, ok: bool, anchor: &str, data: Value) -> Self {
        let status = if ok { CheckStatus::Verified } else { CheckStatus::Failed };
        Self::new(name, status, anchor, data)
    }

    fn error(name: &str, anchor: &str, e: &Error) -> Self {
        Self::new(name, CheckStatus::Failed, anchor, json!({ "error": e.to_string() }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Surjective,
    Failed { reason: String },
    OutOfScope { reason: String },
}

impl Verdict {
    pub fn is_surjective(&self) -> bool {
        matches!(self, Verdict::Surjective)
    }

    pub fn label(&self) -> String {
        match self {
            Verdict::Surjective => "surjective".into(),
            Verdict::Failed { reason } => format!("failed({reason})"),
            Verdict::OutOfScope { reason } => format!("out-of-scope({reason})"),
        }
    }
}

/// Surjective iff no check failed.
pub fn aggregate(checks: &[Check]) -> Verdict {
    let failed: Vec<&str> = checks.iter().filter(|c| c.status == CheckStatus::Failed).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Verdict::Surjective
    } else {
        Verdict::Failed { reason: failed.join(",") }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    ModL,
    LAdic,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub ideal: PrimeIdeal,
    pub degree: usize,
    pub kind: CertificateKind,
    pub checks: Vec<Check>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairCertificate {
    pub ideals: (PrimeIdeal, PrimeIdeal),
    pub checks: Vec<Check>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl PairCertificate {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Knobs shared by all certificates of a run.
#[derive(Clone, Debug, Serialize)]
pub struct CertOptions {
    /// Largest deg 𝔩 certified; larger ones are out of scope.
    pub max_deg: usize,
    pub zeta_cap: usize,
    pub allow_small_q: bool,
}

impl Default for CertOptions {
    fn default() -> Self {
        CertOptions { max_deg: 3, zeta_cap: crate::irred::DEFAULT_SCAN_DEGREE_CAP, allow_small_q: false }
    }
}

/// A family member with memoized Frobenius charpolys.
pub struct Context {
    pub phi: DrinfeldModule,
    pub opts: CertOptions,
    charpolys: Mutex<HashMap<PrimeIdeal, Arc<Result<FrobCharPoly>>>>,
}

const A_FAMILY: &str = "family membership: gcd conditions on g1, g2 against T^q - T";
const A_DET: &str = "det of the torsion representation equals the Carlitz character (Hayes)";
const A_IRRED: &str = "irreducibility of the torsion module: eta collision at (T), zeta scan elsewhere";
const A_INERTIA: &str = "Tate uniformization at (T): inertia image of order |A/l|^2";
const A_CENTER: &str = "maximal subgroups with a full Sylow p-subgroup and irreducible action contain SL3";
const A_SIEVE: &str = "Aschbacher classification of maximal subgroups of GL3";
const A_LIFT: &str = "Pink-Rutsche lifting criterion for open subgroups of GL_r";
const A_NONSCALAR: &str = "non-scalar element of the mod l^2 image congruent to 1 mod l";
const A_PAIR: &str = "Goursat-Ribet lemma with Dieudonne's description of isomorphisms of GL3";
const A_SUBRING: &str = "subring generated by tr^3/det and det/tr^3 is all of A/a";

impl Context {
    pub fn new(phi: DrinfeldModule, opts: CertOptions) -> Self {
        Context { phi, opts, charpolys: Mutex::new(HashMap::new()) }
    }

    pub fn fq(&self) -> &Fq {
        self.phi.fq()
    }

    pub fn charpoly(&self, p: &PrimeIdeal) -> Arc<Result<FrobCharPoly>> {
        if let Some(c) = self.charpolys.lock().expect("poisoned").get(p) {
            return c.clone();
        }
        let r = Arc::new(self.phi.reduce_at(p).and_then(|psi| frob_charpoly_solve(&psi)));
        self.charpolys.lock().expect("poisoned").insert(p.clone(), r.clone());
        r
    }

    fn small_q_reason(&self) -> Option<String> {
        let q = self.fq().q();
        (q < 7 || q % 2 == 0).then(|| format!("family requires an odd q >= 7, got q = {q}"))
    }

    /// Do det(Frob_𝔭) = μ𝔭 over good primes 𝔭 ∤ a generate (A/a)^×?  Primes are
    /// added degree by degree up to `deg a + 1`.
    fn det_generation(&self, a: &PolyA) -> Result<Value> {
        let ring = QuotientRing::new(a)?;
        let f = self.fq();
        let mut gens: Vec<PolyA> = Vec::new();
        let cap = ring.degree() + 1;
        for d in 1..=cap {
            let primes: Vec<PrimeIdeal> = enum_primes(f, d, &[])
                .into_iter()
                .filter(|p| p.degree() == d && !p.is_t() && !p.generator().divides(a))
                .collect();
            for p in &primes {
                if let Ok(cp) = self.charpoly(p).as_ref() {
                    gens.push(ring.reduce(&cp.det()));
                }
            }
            if ring.generates_units(&gens)? {
                return Ok(json!({ "generated": true, "unit_group_order": ring.unit_count(), "primes_sampled": gens.len(), "max_prime_degree": d }));
            }
        }
        Ok(json!({ "generated": false, "unit_group_order": ring.unit_count(), "primes_sampled": gens.len(), "max_prime_degree": cap }))
    }

    fn family_check(&self) -> Check {
        let class = self.phi.classify();
        let tag = class.as_ref().map_or(FamilyType::NotInFamily, |c| c.tag);
        let data = match &class {
            Some(c) => json!({ "type": c.tag, "gcd_g1": c.gcd_g1.to_string(), "gcd_g2": c.gcd_g2.to_string() }),
            None => json!({ "type": FamilyType::NotInFamily }),
        };
        Check::computed("family", tag != FamilyType::NotInFamily, A_FAMILY, data)
    }

    fn gate(&self, l: &PrimeIdeal, kind: CertificateKind) -> std::result::Result<Vec<Check>, Certificate> {
        let family = self.family_check();
        if family.status == CheckStatus::Failed {
            return Err(Certificate {
                ideal: l.clone(),
                degree: l.degree(),
                kind,
                verdict: Verdict::Failed { reason: "family".into() },
                checks: vec![family],
            });
        }
        if l.degree() > self.opts.max_deg {
            return Err(Certificate {
                ideal: l.clone(),
                degree: l.degree(),
                kind,
                verdict: Verdict::OutOfScope { reason: format!("deg l > {}", self.opts.max_deg) },
                checks: vec![family],
            });
        }
        Ok(vec![family])
    }

    fn finish(&self, l: &PrimeIdeal, kind: CertificateKind, checks: Vec<Check>) -> Certificate {
        let mut verdict = aggregate(&checks);
        if let (Verdict::Surjective, Some(r)) = (&verdict, self.small_q_reason()) {
            verdict = Verdict::OutOfScope { reason: r };
        }
        Certificate { ideal: l.clone(), degree: l.degree(), kind, checks, verdict }
    }

    pub fn certify_mod_l(&self, l: &PrimeIdeal) -> Certificate {
        let mut checks = match self.gate(l, CertificateKind::ModL) {
            Ok(c) => c,
            Err(cert) => return cert,
        };
        let q_prime = l.norm();

        let det = match self.det_generation(l.generator()) {
            Ok(d) => Check::computed("det_full", d["generated"] == json!(true), A_DET, d),
            Err(e) => Check::error("det_full", A_DET, &e),
        };
        let det_ok = det.status == CheckStatus::Verified;
        checks.push(det);

        let irr = match irred_certificate(&self.phi, l, self.opts.zeta_cap) {
            Ok(cert) => {
                let ok = cert.verify(&self.phi).unwrap_or(false);
                Check::computed("irreducible", ok, A_IRRED, serde_json::to_value(&cert).expect("serializable"))
            }
            Err(e) => Check::error("irreducible", A_IRRED, &e),
        };
        let irr_ok = irr.status == CheckStatus::Verified;
        checks.push(irr);

        let expected = (q_prime as u128).pow(2);
        let (inertia, divisor) = match inertia_order(&self.phi, l) {
            Ok(r) => {
                let ok = r.identity_check && r.order_divisor == expected;
                let d = if ok { r.order_divisor } else { 1 };
                (Check::computed("inertia_divisor", ok, A_INERTIA, serde_json::to_value(&r).expect("serializable")), d)
            }
            Err(e) => (Check::error("inertia_divisor", A_INERTIA, &e), 1),
        };
        checks.push(inertia);

        checks.push(Check::new("center_contained", CheckStatus::Cited, A_CENTER, json!({ "q_prime": q_prime })));

        let ev = SieveEvidence { q_prime, irreducible: irr_ok, divisor, det_full: det_ok, center_contained: true };
        checks.push(match aschbacher_sieve(&ev) {
            Ok(v) => Check::computed("sieve", v.surjective(), A_SIEVE, serde_json::to_value(&v).expect("serializable")),
            Err(e) => Check::error("sieve", A_SIEVE, &e),
        });
        self.finish(l, CertificateKind::ModL, checks)
    }

    pub fn certify_l_adic(&self, l: &PrimeIdeal) -> Certificate {
        let mod_l = self.certify_mod_l(l);
        if matches!(mod_l.verdict, Verdict::Failed { .. }) && mod_l.checks.len() == 1 {
            return Certificate { kind: CertificateKind::LAdic, ..mod_l };
        }
        if l.degree() > self.opts.max_deg {
            return Certificate { kind: CertificateKind::LAdic, ..mod_l };
        }
        let surj = !matches!(mod_l.verdict, Verdict::Failed { .. });
        let mut checks = mod_l.checks;
        checks.push(Check::computed("mod_l_surjective", surj, A_SIEVE, json!({ "verdict": mod_l.verdict.label() })));
        let q_prime = l.norm();
        checks.push(Check::computed("residue_ge_4", q_prime >= 4, A_LIFT, json!({ "q_prime": q_prime })));

        let l2 = l.generator().pow(2);
        checks.push(match self.det_generation(&l2) {
            Ok(d) => Check::computed("det_full_l2", d["generated"] == json!(true), A_DET, d),
            Err(e) => Check::error("det_full_l2", A_DET, &e),
        });

        if l.is_t() {
            checks.push(match nonscalar_witness_at_t(&self.phi) {
                Ok(r) => {
                    let data = json!({
                        "root_valuation": r.root_valuation.to_string(),
                        "root_count": r.root_count,
                        "divisor": r.divisor,
                        "terms": r.terms,
                        "minimum": r.minimum,
                        "unique_minimum": r.unique_minimum,
                        "gl3_p_valuation": r.gl3_p_valuation,
                        "divisor_p_valuation": r.divisor_p_valuation,
                    });
                    Check::computed("nonscalar_witness", r.holds(), A_NONSCALAR, data)
                }
                Err(e) => Check::error("nonscalar_witness", A_NONSCALAR, &e),
            });
        } else {
            let divisor = inertia_order(&self.phi, l).map(|r| r.order_divisor).unwrap_or(0);
            checks.push(Check::new(
                "nonscalar_witness",
                CheckStatus::Cited,
                "unipotent shape of the inertia image at (T) for ideals prime to T",
                json!({ "inertia_divisor": divisor }),
            ));
        }
        checks.push(Check::new("lifting", CheckStatus::Cited, A_LIFT, json!({ "level": "l^2" })));
        self.finish(l, CertificateKind::LAdic, checks)
    }

    /// Degree-one primes other than (T) and the given ideals.
    fn linear_primes_avoiding(&self, avoid: &[&PrimeIdeal]) -> Vec<PrimeIdeal> {
        let f = self.fq();
        (1..f.q()).map(|c| PrimeIdeal::linear(f, c)).filter(|p| !avoid.contains(&p)).collect()
    }

    pub fn certify_pair(&self, l1: &PrimeIdeal, l2: &PrimeIdeal, mod_l: &HashMap<PrimeIdeal, Verdict>) -> PairCertificate {
        let mut checks = vec![self.family_check()];
        let ideals = (l1.clone(), l2.clone());
        if checks[0].status == CheckStatus::Failed {
            return PairCertificate { ideals, checks, verdict: Verdict::Failed { reason: "family".into() } };
        }
        let both = [l1, l2].iter().all(|l| mod_l.get(*l).is_some_and(|v| !matches!(v, Verdict::Failed { .. })));
        checks.push(Check::computed(
            "both_mod_l_surjective",
            both && l1 != l2,
            A_SIEVE,
            json!({ "l1": mod_l.get(l1).map(Verdict::label), "l2": mod_l.get(l2).map(Verdict::label) }),
        ));
        let a = l1.generator() * l2.generator();
        checks.push(match self.det_generation(&a) {
            Ok(d) => Check::computed("det_full", d["generated"] == json!(true), A_DET, d),
            Err(e) => Check::error("det_full", A_DET, &e),
        });
        checks.push(Check::new("sl3_projections", CheckStatus::Cited, "commutator subgroup of GL3 is SL3", json!({})));

        let samples = self.linear_primes_avoiding(&[l1, l2]);
        let mut s = Vec::new();
        for p in &samples {
            if let Ok(cp) = self.charpoly(p).as_ref() {
                if let Ok(m) = charpoly_mod(cp, &a) {
                    s.extend(m.tr_pow_over_det);
                    s.extend(m.det_over_tr_pow);
                }
            }
        }
        s.sort();
        s.dedup();
        checks.push(match subring_generated(&s, &a) {
            Ok(r) => Check::computed(
                "subring_full",
                r.is_full,
                A_SUBRING,
                json!({ "generators": s.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "dimension": r.dimension, "ring_dimension": r.ring_dimension }),
            ),
            Err(e) => Check::error("subring_full", A_SUBRING, &e),
        });

        let equal = l1.norm() == l2.norm();
        checks.push(Check::new(
            "equal_residue_note",
            CheckStatus::Verified,
            A_PAIR,
            json!({ "equal_residue_fields": equal, "q1": l1.norm(), "q2": l2.norm() }),
        ));
        checks.push(if !equal {
            Check::new("second_type_refuted", CheckStatus::NotApplicable, A_PAIR, json!({ "reason": "residue fields differ" }))
        } else {
            match self.second_type(l1, l2, &samples) {
                Ok(Some(p)) => Check::computed("second_type_refuted", true, A_PAIR, json!({ "witness_prime": p.to_string() })),
                Ok(None) => Check::computed("second_type_refuted", false, A_PAIR, json!({ "primes_tried": samples.len() })),
                Err(e) => Check::error("second_type_refuted", A_PAIR, &e),
            }
        });
        checks.push(Check::new("goursat_closure", CheckStatus::Cited, A_PAIR, json!({})));
        let mut verdict = aggregate(&checks);
        if let (Verdict::Surjective, Some(r)) = (&verdict, self.small_q_reason()) {
            verdict = Verdict::OutOfScope { reason: r };
        }
        PairCertificate { ideals, checks, verdict }
    }

    fn second_type(&self, l1: &PrimeIdeal, l2: &PrimeIdeal, samples: &[PrimeIdeal]) -> Result<Option<PrimeIdeal>> {
        let f1 = crate::algebra::ResidueField::new(l1)?;
        let f2 = crate::algebra::ResidueField::new(l2)?;
        for p in samples {
            let cp = match self.charpoly(p).as_ref() {
                Ok(cp) => cp.clone(),
                Err(e) => return Err(e.clone()),
            };
            let p1 = inverse_charpoly(&f1, &charpoly_over(&cp, &f1));
            let p2 = charpoly_over(&cp, &f2);
            if coset_trace_test(&p1, &f1, &p2, &f2) == CosetOutcome::Refuted {
                return Ok(Some(p.clone()));
            }
        }
        Ok(None)
    }
}

/// Parsed run configuration.
#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub q: u64,
    /// Modulus of F_q over F_p in the variable u, lowest degree first.
    pub ext_modulus: Option<Vec<u32>>,
    pub g1: String,
    pub g2: String,
    pub max_deg: usize,
    pub pair_max_deg: usize,
    pub pairs: bool,
    pub allow_small_q: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            q: 7,
            ext_modulus: None,
            g1: "0".into(),
            g2: "1".into(),
            max_deg: 3,
            pair_max_deg: 2,
            pairs: false,
            allow_small_q: false,
        }
    }
}

impl Config {
    pub fn field(&self) -> Result<Fq> {
        let spec = match &self.ext_modulus {
            None => FieldSpec::for_order(self.q)?,
            Some(m) => {
                let (p, e) = crate::algebra::field::prime_power(self.q)
                    .ok_or_else(|| Error::InvalidField(format!("{} is not a prime power", self.q)))?;
                FieldSpec::new(p, e, m.clone())?
            }
        };
        Fq::new(spec)
    }

    pub fn parse_ext_modulus(q: u64, s: &str) -> Result<Vec<u32>> {
        let (p, _) = crate::algebra::field::prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        parse_prime_poly(p, s)
    }

    /// Field, module and options, refusing q outside the family's range
    /// unless explicitly allowed.
    pub fn build(&self) -> Result<Context> {
        let fq = self.field()?;
        if (self.q < 7 || self.q % 2 == 0) && !self.allow_small_q {
            return Err(Error::Invalid(format!(
                "family requires an odd q >= 7, got q = {} (use --allow-small-q to run anyway)",
                self.q
            )));
        }
        let g1 = parse_poly(&fq, &self.g1)?;
        let g2 = parse_poly(&fq, &self.g2)?;
        let phi = DrinfeldModule::family(&g1, &g2);
        Ok(Context::new(phi, CertOptions { max_deg: self.max_deg, allow_small_q: self.allow_small_q, ..Default::default() }))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportMeta {
    pub tool: String,
    pub version: String,
    pub module: ModuleDescriptor,
    pub max_deg: usize,
    pub pair_max_deg: Option<usize>,
    pub prime_count: usize,
    pub pair_count: usize,
    pub all_surjective: bool,
    /// The adelic statement is never computed, only assembled from pairs and citations.
    pub adelic: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub certificates: Vec<Certificate>,
    pub pairs: Vec<PairCertificate>,
}

pub fn run_report(config: &Config) -> Result<Report> {
    let ctx = config.build()?;
    let f = ctx.fq().clone();
    let primes = enum_primes(&f, config.max_deg, &[]);
    let certificates: Vec<Certificate> = primes.par_iter().map(|l| ctx.certify_l_adic(l)).collect();
    let verdicts: HashMap<PrimeIdeal, Verdict> =
        certificates.iter().map(|c| (c.ideal.clone(), c.verdict.clone())).collect();
    let mut pairs = Vec::new();
    if config.pairs {
        let pp: Vec<&PrimeIdeal> = primes.iter().filter(|p| p.degree() <= config.pair_max_deg).collect();
        let mut todo = Vec::new();
        for i in 0..pp.len() {
            for j in i + 1..pp.len() {
                todo.push((pp[i], pp[j]));
            }
        }
        pairs = todo.par_iter().map(|(a, b)| ctx.certify_pair(a, b, &verdicts)).collect();
    }
    let all = certificates.iter().all(|c| c.verdict.is_surjective()) && pairs.iter().all(|p| p.verdict.is_surjective());
    let meta = ReportMeta {
        tool: "certify".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        module: ctx.phi.descriptor(),
        max_deg: config.max_deg,
        pair_max_deg: config.pairs.then_some(config.pair_max_deg),
        prime_count: certificates.len(),
        pair_count: pairs.len(),
        all_surjective: all,
        adelic: json!({
            "status": "cited",
            "statement": "pairwise certificates combined with the Goursat-Ribet product lemma and perfectness of SL3 over A/l^n; not computed",
        }),
    };
    Ok(Report { meta, certificates, pairs })
}

impl Report {
    pub fn all_surjective(&self) -> bool {
        self.meta.all_surjective
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let m = &self.meta.module;
        let mut out = String::new();
        let _ = writeln!(out, "q = {}  g1 = {}  g2 = {}", m.q, m.g1.as_deref().unwrap_or("-"), m.g2.as_deref().unwrap_or("-"));
        let _ = writeln!(out, "phi_T = {}", m.phi_t);
        let _ = writeln!(out, "type: {}", m.family_type.map_or("-".to_string(), |t| t.to_string()));
        let _ = writeln!(out);
        for c in &self.certificates {
            let _ = writeln!(out, "l = {:<16} {}", c.ideal.to_string(), c.verdict.label());
            for ch in &c.checks {
                let _ = writeln!(out, "    {:<22} {}", ch.name, status_label(ch.status));
            }
        }
        if !self.pairs.is_empty() {
            let _ = writeln!(out);
            for p in &self.pairs {
                let _ = writeln!(out, "({}) x ({})  {}", p.ideals.0, p.ideals.1, p.verdict.label());
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{} primes, {} pairs, all surjective: {}",
            self.meta.prime_count, self.meta.pair_count, self.meta.all_surjective
        );
        out
    }
}

fn status_label(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Verified => "verified",
        CheckStatus::Cited => "cited",
        CheckStatus::Failed => "FAILED",
        CheckStatus::NotApplicable => "not-applicable",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g1: &str, g2: &str) -> Context {
        Config { g1: g1.into(), g2: g2.into(), ..Default::default() }.build().unwrap()
    }

    #[test]
    fn mod_l_examples() {
        let c = ctx("0", "1");
        let f = c.fq().clone();
        assert!(c.certify_mod_l(&PrimeIdeal::t(&f)).verdict.is_surjective());
        let c = ctx("T", "1");
        let cert = c.certify_mod_l(&PrimeIdeal::linear(&f, 3));
        assert!(cert.verdict.is_surjective(), "{:?}", cert.checks);
        let c = ctx("T^2", "T");
        let cert = c.certify_mod_l(&PrimeIdeal::t(&f));
        assert_eq!(cert.verdict, Verdict::Failed { reason: "family".into() });
    }

    #[test]
    fn l_adic_examples() {
        let c = ctx("0", "1");
        let f = c.fq().clone();
        let cert = c.certify_l_adic(&PrimeIdeal::t(&f));
        assert!(cert.verdict.is_surjective());
        assert_eq!(cert.check("nonscalar_witness").unwrap().data["minimum"], json!("-1/49"));
        let c = ctx("T", "1");
        let cert = c.certify_l_adic(&PrimeIdeal::linear(&f, 1));
        assert!(cert.verdict.is_surjective());
        assert_eq!(cert.check("det_full_l2").unwrap().data["unit_group_order"], json!(42));
        assert_eq!(cert.check("nonscalar_witness").unwrap().status, CheckStatus::Cited);
    }

    #[test]
    fn pair_examples() {
        let c = ctx("T", "1");
        let f = c.fq().clone();
        let (l1, l2) = (PrimeIdeal::linear(&f, 1), PrimeIdeal::linear(&f, 2));
        let l3 = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        let v: HashMap<PrimeIdeal, Verdict> =
            [&l1, &l2, &l3].iter().map(|l| ((*l).clone(), c.certify_mod_l(l).verdict)).collect();
        let p = c.certify_pair(&l1, &l2, &v);
        assert!(p.verdict.is_surjective(), "{:?}", p.checks);
        assert_eq!(p.check("second_type_refuted").unwrap().status, CheckStatus::Verified);
        let p = c.certify_pair(&l1, &l3, &v);
        assert!(p.verdict.is_surjective());
        assert_eq!(p.check("second_type_refuted").unwrap().status, CheckStatus::NotApplicable);
    }

    #[test]
    fn aggregation_flips_on_any_failure() {
        let c = ctx("T", "1");
        let f = c.fq().clone();
        let cert = c.certify_l_adic(&PrimeIdeal::linear(&f, 3));
        assert!(cert.verdict.is_surjective());
        for i in 0..cert.checks.len() {
            if cert.checks[i].status == CheckStatus::Cited {
                continue;
            }
            let mut checks = cert.checks.clone();
            checks[i].status = CheckStatus::Failed;
            assert!(!aggregate(&checks).is_surjective());
        }
    }

    #[test]
    fn small_q_refused() {
        let cfg = Config { q: 5, ..Default::default() };
        assert!(cfg.build().is_err());
        let cfg = Config { q: 5, allow_small_q: true, max_deg: 1, ..Default::default() };
        let r = run_report(&cfg).unwrap();
        assert!(r.certificates.iter().all(|c| !c.verdict.is_surjective()));
    }
}
