//! Orders of GL₃(F_q) and of the subgroups that the sieve compares against.

use serde::Serialize;

use crate::algebra::field::prime_power;
use crate::error::{Error, Result};

/// An exact group order with its factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupOrder {
    pub value: u128,
    pub factors: Vec<(u128, u32)>,
}

fn factor(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl GroupOrder {
    pub fn new(n: u128) -> Self {
        GroupOrder { value: n, factors: factor(n) }
    }

    /// Product of small factors, each factored separately.
    pub fn product(parts: &[u128]) -> Self {
        let mut value = 1u128;
        let mut factors: Vec<(u128, u32)> = Vec::new();
        for &part in parts {
            value *= part;
            for (p, k) in factor(part) {
                match factors.iter_mut().find(|f| f.0 == p) {
                    Some(f) => f.1 += k,
                    None => factors.push((p, k)),
                }
            }
        }
        factors.sort();
        GroupOrder { value, factors }
    }

    pub fn quotient(&self, d: u128) -> Self {
        assert!(self.value % d == 0, "{d} does not divide {}", self.value);
        let mut factors = self.factors.clone();
        for (p, k) in factor(d) {
            let f = factors.iter_mut().find(|f| f.0 == p).expect("divisor");
            f.1 -= k;
        }
        factors.retain(|f| f.1 > 0);
        GroupOrder { value: self.value / d, factors }
    }

    pub fn divisible_by(&self, d: u128) -> bool {
        self.value % d == 0
    }

    pub fn valuation(&self, p: u128) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalOrders {
    pub q: u64,
    pub gl3: GroupOrder,
    pub sl3: GroupOrder,
    pub pgl3: GroupOrder,
    pub psl3: GroupOrder,
    /// GL₁(F_q) ≀ S₃.
    pub wreath: GroupOrder,
    /// GL₁(F_{q³}).
    pub singer: GroupOrder,
    /// GU₃(√q), when q is a square.
    pub gu3: Option<GroupOrder>,
    pub go3: GroupOrder,
    /// 3^{1+2}.Sp₂(3).
    pub extraspecial: GroupOrder,
    pub s_class: Vec<(String, GroupOrder)>,
}

pub(crate) fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `√q` when `q` is an even power of its prime.
pub fn square_root_order(q: u64) -> Option<u64> {
    let (p, e) = prime_power(q)?;
    (e % 2 == 0).then(|| (p as u64).pow(e / 2))
}

pub fn gl3_order(q: u64) -> GroupOrder {
    let q = q as u128;
    GroupOrder::product(&[q * q * q, q * q * q - 1, q * q - 1, q - 1])
}

pub fn gu3_order(q2: u64) -> GroupOrder {
    let r = q2 as u128;
    GroupOrder::product(&[r * r * r, r + 1, r * r - 1, r * r * r + 1])
}

pub fn go3_order(q: u64) -> GroupOrder {
    let q = q as u128;
    GroupOrder::product(&[2, q, q * q - 1])
}

pub fn s_class_orders() -> Vec<(String, GroupOrder)> {
    [("PSL3(2)", 168u128), ("PSL3(2)x3", 504), ("3.A6", 1080), ("3.A6.2", 2160), ("3.A7", 7560)]
        .into_iter()
        .map(|(n, o)| (n.to_string(), GroupOrder::new(o)))
        .collect()
}

pub fn classical_orders(q: u64) -> Result<ClassicalOrders> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidField(format!("{q} is not a prime power")));
    }
    let qq = q as u128;
    let gl3 = gl3_order(q);
    let sl3 = gl3.quotient(qq - 1);
    let pgl3 = gl3.quotient(qq - 1);
    let psl3 = sl3.quotient(gcd(3, qq - 1));
    Ok(ClassicalOrders {
        q,
        wreath: GroupOrder::product(&[qq - 1, qq - 1, qq - 1, 6]),
        singer: GroupOrder::product(&[qq * qq * qq - 1]),
        gu3: square_root_order(q).map(gu3_order),
        go3: go3_order(q),
        extraspecial: GroupOrder::product(&[8, 81]),
        s_class: s_class_orders(),
        gl3,
        sl3,
        pgl3,
        psl3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(gl3_order(2).value, 168);
        assert_eq!(gl3_order(3).value, 11232);
        assert_eq!(go3_order(7).value, 672);
        let o = classical_orders(49).unwrap();
        assert_eq!(o.gu3.unwrap().value, 343 * 8 * 48 * 344);
        assert!(classical_orders(7).unwrap().gu3.is_none());
        assert_eq!(o.extraspecial.value, 648);
        let v: Vec<u128> = s_class_orders().iter().map(|s| s.1.value).collect();
        assert_eq!(v, vec![168, 504, 1080, 2160, 7560]);
        assert!(classical_orders(12).is_err());
    }

    #[test]
    fn factorization_consistent() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49] {
            let o = classical_orders(q).unwrap();
            for g in [&o.gl3, &o.sl3, &o.psl3, &o.go3] {
                let prod: u128 = g.factors.iter().map(|&(p, k)| p.pow(k)).product();
                assert_eq!(prod, g.value);
            }
        }
    }
}
