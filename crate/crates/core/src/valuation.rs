//! T-adic valuations, Newton polygons and the inertia bookkeeping at (T).
//!
//! Everything is exact: valuations live in ℚ ∪ {+∞}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::algebra::{PolyA, PrimeIdeal};
use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

fn q_pow(q: u32, e: u32) -> i128 {
    (q as i128).pow(e)
}

/// A valuation: a rational or +∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Val {
    Finite(Q),
    Infinite,
}

impl Val {
    pub fn int(n: i128) -> Self {
        Val::Finite(Q::from_integer(n))
    }

    pub fn finite(&self) -> Option<Q> {
        match self {
            Val::Finite(v) => Some(*v),
            Val::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Val::Infinite)
    }

    /// `n·v`, with 0·∞ = ∞.
    pub fn scale(&self, n: i128) -> Self {
        match self {
            Val::Finite(v) => Val::Finite(v * n),
            Val::Infinite => Val::Infinite,
        }
    }

    pub fn of_poly(a: &PolyA) -> Self {
        a.t_adic_valuation().map_or(Val::Infinite, |v| Val::int(v as i128))
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, rhs: Val) -> Val {
        match (self, rhs) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinite,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
            (Val::Finite(_), Val::Infinite) => Ordering::Less,
            (Val::Infinite, Val::Finite(_)) => Ordering::Greater,
            (Val::Infinite, Val::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn ser_q<S: Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    #[serde(serialize_with = "ser_q")]
    pub slope: Q,
    pub length: i64,
    pub start: i64,
}

/// Lower convex hull of `(exponent, valuation)` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub points: Vec<(i64, Val)>,
    /// Finite points lying on the hull, collinear ones included.
    pub vertices: Vec<(i64, Val)>,
    pub segments: Vec<Segment>,
}

fn cross(o: (i64, Q), a: (i64, Q), b: (i64, Q)) -> Q {
    Q::from_integer((a.0 - o.0) as i128) * (b.1 - o.1) - (a.1 - o.1) * Q::from_integer((b.0 - o.0) as i128)
}

pub fn newton_polygon(points: &[(i64, Val)]) -> Result<NewtonPolygon> {
    let mut pts = points.to_vec();
    pts.sort_by_key(|p| p.0);
    let mut fin: Vec<(i64, Q)> = pts.iter().filter_map(|&(e, v)| v.finite().map(|v| (e, v))).collect();
    fin.dedup_by(|b, a| {
        // same exponent: keep the lower valuation
        if a.0 == b.0 {
            a.1 = a.1.min(b.1);
            true
        } else {
            false
        }
    });
    if fin.len() < 2 {
        return Err(Error::TooFewPoints);
    }
    // monotone chain, dropping collinear middles
    let mut hull: Vec<(i64, Q)> = Vec::new();
    for &p in &fin {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= Q::zero() {
            hull.pop();
        }
        hull.push(p);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let len = w[1].0 - w[0].0;
            Segment { slope: (w[1].1 - w[0].1) / Q::from_integer(len as i128), length: len, start: w[0].0 }
        })
        .collect::<Vec<_>>();
    let on_hull = |e: i64, v: Q| {
        hull.windows(2).any(|w| {
            e >= w[0].0 && e <= w[1].0 && {
                let s = (w[1].1 - w[0].1) / Q::from_integer((w[1].0 - w[0].0) as i128);
                w[0].1 + s * Q::from_integer((e - w[0].0) as i128) == v
            }
        })
    };
    let vertices = fin.iter().filter(|&&(e, v)| on_hull(e, v)).map(|&(e, v)| (e, Val::Finite(v))).collect();
    Ok(NewtonPolygon { points: pts, vertices, segments })
}

impl NewtonPolygon {
    /// Root valuations `−slope` with multiplicities.
    pub fn root_valuations(&self) -> Vec<(Q, i64)> {
        self.segments.iter().map(|s| (-s.slope, s.length)).collect()
    }

    pub fn segment_with_slope(&self, slope: Q) -> Option<&Segment> {
        self.segments.iter().find(|s| s.slope == slope)
    }

    pub fn is_vertex(&self, e: i64, v: Val) -> bool {
        self.vertices.contains(&(e, v))
    }

    /// Plain-text table: exponent, valuation, on-hull flag.
    pub fn to_table(&self) -> String {
        let mut out = String::from("exponent\tvaluation\ton_hull\n");
        for &(e, v) in &self.points {
            out.push_str(&format!("{e}\t{v}\t{}\n", self.is_vertex(e, v)));
        }
        out
    }
}

/// `(q^i − 1, ν_T(coefficient of τ^i))` for φ_a(x)/x.
pub fn phi_coeff_valuations(phi: &DrinfeldModule, a: &PolyA) -> Vec<(i64, Val)> {
    let q = phi.fq().q();
    phi.phi_of(a)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| ((q_pow(q, i as u32) - 1) as i64, Val::of_poly(c)))
        .collect()
}

/// The case formula for ν'(e_Λ(a₁w₁ + a₂w₂ + bz)).
pub fn lattice_valuation(q: u32, i: u32, z_val: Q, b_zero: bool, w_val: Q) -> Q {
    if b_zero {
        w_val
    } else {
        z_val * q_pow(q, 2 * i)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InertiaReport {
    pub ideal: PrimeIdeal,
    /// q^{2 deg 𝔩}; for 𝔩 = (T) the q² coming from the Newton polygon.
    pub order_divisor: u128,
    #[serde(serialize_with = "ser_q")]
    pub z_valuation: Q,
    pub identity_check: bool,
    #[serde(serialize_with = "ser_q")]
    pub lhs: Q,
    #[serde(serialize_with = "ser_q")]
    pub rhs: Q,
}

fn require_family(phi: &DrinfeldModule) -> Result<()> {
    if phi.params().is_none() {
        return Err(Error::Invalid("module is not in the family".into()));
    }
    Ok(())
}

pub fn inertia_order(phi: &DrinfeldModule, l: &PrimeIdeal) -> Result<InertiaReport> {
    require_family(phi)?;
    let q = phi.fq().q();
    let qi = q as i128;
    if l.is_t() {
        let np = newton_polygon(&phi_coeff_valuations(phi, &PolyA::t(phi.fq())))?;
        let last = np.segments.last().expect("two points");
        let z = -last.slope;
        let expect_len = (qi.pow(3) - qi.pow(2)) as i64;
        let ok = last.slope == Q::new(1, qi * qi) && last.length == expect_len;
        return Ok(InertiaReport {
            ideal: l.clone(),
            order_divisor: *z.denom() as u128,
            z_valuation: z,
            identity_check: ok,
            lhs: Q::from_integer(last.length as i128),
            rhs: Q::from_integer(expect_len as i128),
        });
    }
    let d = l.degree() as u32;
    let lhs: Q = (1..=d).map(|i| Q::from_integer((qi - 1) * q_pow(q, 3 * (i - 1)))).sum();
    // Σ over (a₁, a₂, b) with b ≠ 0 of q^{2 deg b}; the b = 0 terms cancel.
    let ab = q_pow(q, 2 * d);
    let count = |i: u32| if i == 0 { qi - 1 } else { q_pow(q, i + 1) - q_pow(q, i) };
    let weight: i128 = (0..d).map(|i| ab * count(i) * q_pow(q, 2 * i)).sum();
    let z = -lhs / Q::from_integer(weight);
    let rhs: Q =
        -(0..d).map(|i| Q::from_integer(ab * count(i)) * lattice_valuation(q, i, z, false, Q::zero())).sum::<Q>();
    let closed = -Q::new(1, q_pow(q, 2 * d));
    Ok(InertiaReport {
        ideal: l.clone(),
        order_divisor: *z.denom() as u128,
        z_valuation: z,
        identity_check: lhs == rhs && z == closed,
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonScalarReport {
    pub polygon_t2: NewtonPolygon,
    /// ν(α) for the roots on the slope-1/q⁴ segment.
    #[serde(serialize_with = "ser_q")]
    pub root_valuation: Q,
    pub root_count: i64,
    /// q⁴, forced by the ramification of those roots.
    pub divisor: u128,
    /// ν(Δ_i) + q^i ν(α), i = 0..3.
    pub terms: Vec<Val>,
    pub minimum: Val,
    pub unique_minimum: bool,
    /// The minimum is attained away from the scalar term ν(α).
    pub witness: bool,
    pub gl3_p_valuation: u32,
    pub divisor_p_valuation: u32,
}

impl NonScalarReport {
    pub fn holds(&self) -> bool {
        self.witness && self.unique_minimum && self.divisor_p_valuation > self.gl3_p_valuation
    }
}

fn p_adic(mut n: u128, p: u128) -> u32 {
    let mut k = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

pub fn nonscalar_witness_at_t(phi: &DrinfeldModule) -> Result<NonScalarReport> {
    require_family(phi)?;
    let f = phi.fq();
    let q = f.q();
    let qi = q as i128;
    let t = PolyA::t(f);
    let polygon = newton_polygon(&phi_coeff_valuations(phi, &t.pow(2)))?;
    let target = Q::new(1, qi.pow(4));
    let seg = polygon
        .segment_with_slope(target)
        .ok_or_else(|| Error::Invalid("no slope 1/q^4 segment in the Newton polygon of phi_{T^2}".into()))?;
    let alpha = -seg.slope;
    let root_count = seg.length;
    let terms: Vec<Val> = phi
        .phi_t()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let base = if i == 0 { Val::int(0) } else { Val::of_poly(c) };
            base + Val::Finite(alpha * q_pow(q, i as u32))
        })
        .collect();
    let minimum = *terms.iter().min().expect("nonempty");
    let unique_minimum = terms.iter().filter(|&&v| v == minimum).count() == 1;
    let witness = minimum != terms[0];
    let qq = q as u128;
    let gl3 = (qq.pow(3) - 1) * (qq.pow(3) - qq) * (qq.pow(3) - qq * qq);
    let p = f.p() as u128;
    Ok(NonScalarReport {
        polygon_t2: polygon.clone(),
        root_valuation: alpha,
        root_count,
        divisor: *alpha.denom() as u128,
        terms,
        minimum,
        unique_minimum,
        witness,
        gl3_p_valuation: p_adic(gl3, p),
        divisor_p_valuation: p_adic(*alpha.denom() as u128, p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;

    fn qq(n: i128, d: i128) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn simple_polygons() {
        let np = newton_polygon(&[(0, Val::int(0)), (1, Val::int(0))]).unwrap();
        assert_eq!(np.segments.len(), 1);
        assert_eq!(np.segments[0].slope, Q::zero());
        assert_eq!(newton_polygon(&[(0, Val::int(0)), (3, Val::Infinite)]), Err(Error::TooFewPoints));
        let np = newton_polygon(&[(0, Val::int(2)), (1, Val::int(1)), (2, Val::int(0)), (3, Val::int(5))]).unwrap();
        assert_eq!(np.vertices.len(), 4);
        assert_eq!(np.segments.len(), 2);
        assert_eq!(np.segments[0].length, 2);
    }

    #[test]
    fn family_polygon_at_t() {
        let f = Fq::of_order(7).unwrap();
        let phi = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let np = newton_polygon(&phi_coeff_valuations(&phi, &PolyA::t(&f))).unwrap();
        let last = np.segments.last().unwrap();
        assert_eq!((last.slope, last.length), (qq(1, 49), 343 - 49));
    }

    #[test]
    fn t_squared_coefficients() {
        let f = Fq::of_order(7).unwrap();
        let phi = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let v = phi_coeff_valuations(&phi, &PolyA::t(&f).pow(2));
        assert_eq!(v[0].1, Val::int(2));
        assert_eq!(v[6].1, Val::int(7i128.pow(4) - 343 + 6));
        assert_eq!(v[5].1, Val::int(6));
        assert_eq!(v[4].1, Val::int(0));
    }

    #[test]
    fn lattice_cases() {
        assert_eq!(lattice_valuation(7, 0, qq(-1, 49), false, Q::zero()), qq(-1, 49));
        assert_eq!(lattice_valuation(7, 1, qq(-1, 2401), false, Q::zero()), qq(-1, 49));
        assert_eq!(lattice_valuation(7, 1, qq(-1, 2401), true, Q::zero()), Q::zero());
    }

    #[test]
    fn inertia_examples() {
        let f = Fq::of_order(7).unwrap();
        let phi = DrinfeldModule::family(&PolyA::t(&f), &PolyA::one(&f));
        let r = inertia_order(&phi, &PrimeIdeal::linear(&f, 1)).unwrap();
        assert_eq!((r.z_valuation, r.order_divisor, r.identity_check), (qq(-1, 49), 49, true));
        let l2 = PrimeIdeal::new(PolyA::new(&f, vec![1, 0, 1])).unwrap();
        let r = inertia_order(&phi, &l2).unwrap();
        assert_eq!((r.z_valuation, r.order_divisor, r.identity_check), (qq(-1, 2401), 2401, true));
        let r = inertia_order(&phi, &PrimeIdeal::t(&f)).unwrap();
        assert_eq!((r.order_divisor, r.identity_check), (49, true));
    }

    #[test]
    fn nonscalar_examples() {
        let f = Fq::of_order(7).unwrap();
        for g1 in [PolyA::t(&f), PolyA::zero(&f)] {
            let phi = DrinfeldModule::family(&g1, &PolyA::one(&f));
            let r = nonscalar_witness_at_t(&phi).unwrap();
            assert_eq!(r.root_valuation, qq(-1, 2401));
            assert_eq!(r.root_count, 7i64.pow(5) - 2401);
            assert_eq!(r.minimum, Val::Finite(qq(-1, 49)));
            assert_eq!((r.gl3_p_valuation, r.divisor_p_valuation), (3, 4));
            assert!(r.holds());
        }
    }
}
