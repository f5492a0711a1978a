//! Text format for polynomials: `c_k*T^k + … + c_0`.
//!
//! A coefficient is an integer (read in the prime field) or a bracketed
//! u-expansion `[a_0,a_1,…]` of an F_q element.  Terms may repeat and are
//! summed; `-` is accepted between terms and in front of the first one.

use super::field::{FiniteField, Fq};
use super::poly::PolyA;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coef {
    Int(i64),
    Digits(Vec<i64>),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = match s.parse() {
            Ok(v) => v,
            Err(_) => {
                self.pos = start;
                return self.err("integer out of range");
            }
        };
        Ok(if neg { -v } else { v })
    }
}

/// Parses into (coefficient, exponent) pairs, each with a sign applied.
fn terms(s: &str, var: u8) -> Result<Vec<(Coef, usize, bool)>> {
    let mut lx = Lexer { src: s.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    let mut negative = lx.eat(b'-');
    loop {
        let coef = match lx.peek() {
            Some(b'[') => {
                lx.pos += 1;
                let mut ds = vec![lx.int()?];
                while lx.eat(b',') {
                    ds.push(lx.int()?);
                }
                if !lx.eat(b']') {
                    return lx.err("expected ']'");
                }
                Some(Coef::Digits(ds))
            }
            Some(c) if c.is_ascii_digit() => Some(Coef::Int(lx.int()?)),
            Some(c) if c == var => None,
            Some(c) => return lx.err(format!("unexpected character '{}'", c as char)),
            None => return lx.err("unexpected end of input"),
        };
        let has_var = match coef {
            None => true,
            Some(_) => lx.eat(b'*'),
        };
        let mut exp = 0;
        if has_var {
            if !lx.eat(var) {
                return lx.err(format!("expected '{}'", var as char));
            }
            exp = 1;
            if lx.eat(b'^') {
                let e = lx.int()?;
                if !(0..=1 << 20).contains(&e) {
                    return lx.err("exponent out of range");
                }
                exp = e as usize;
            }
        }
        out.push((coef.unwrap_or(Coef::Int(1)), exp, negative));
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(c) => return lx.err(format!("unexpected character '{}'", c as char)),
        }
        lx.pos += 1;
    }
    Ok(out)
}

fn coef_value(field: &Fq, c: &Coef, pos_hint: usize) -> Result<u32> {
    let p = field.p() as i64;
    match c {
        Coef::Int(n) => Ok(field.from_int(*n)),
        Coef::Digits(ds) => {
            if ds.len() > field.spec().e as usize {
                return Err(Error::Parse {
                    pos: pos_hint,
                    msg: format!("u-expansion longer than the degree {} of F_q", field.spec().e),
                });
            }
            let d: Vec<u32> = ds.iter().map(|x| x.rem_euclid(p) as u32).collect();
            Ok(field.from_u_digits(&d))
        }
    }
}

/// Parses a polynomial in T over F_q.
pub fn parse_poly(field: &Fq, s: &str) -> Result<PolyA> {
    let ts = terms(s, b'T')?;
    let deg = ts.iter().map(|t| t.1).max().unwrap_or(0);
    let mut v = vec![0u32; deg + 1];
    for (c, e, neg) in &ts {
        let mut x = coef_value(field, c, 0)?;
        if *neg {
            x = field.neg(x);
        }
        v[*e] = field.add(v[*e], x);
    }
    Ok(PolyA::new(field, v))
}

/// Parses a polynomial in `u` with integer coefficients reduced mod `p`;
/// used for the modulus of F_q over F_p.
pub fn parse_prime_poly(p: u32, s: &str) -> Result<Vec<u32>> {
    let ts = terms(s, b'u')?;
    let deg = ts.iter().map(|t| t.1).max().unwrap_or(0);
    let mut v = vec![0i64; deg + 1];
    for (c, e, neg) in &ts {
        let Coef::Int(n) = c else {
            return Err(Error::Parse { pos: 0, msg: "bracketed coefficients are not allowed here".into() });
        };
        v[*e] += if *neg { -n } else { *n };
    }
    let mut out: Vec<u32> = v.iter().map(|x| x.rem_euclid(p as i64) as u32).collect();
    super::poly::trim(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let f = Fq::of_order(7).unwrap();
        let a = parse_poly(&f, "T^2 + 3*T - 1").unwrap();
        assert_eq!(a.coeffs(), &[6, 3, 1]);
        assert_eq!(parse_poly(&f, &a.to_string()).unwrap(), a);
        assert_eq!(parse_poly(&f, "0").unwrap(), PolyA::zero(&f));
        assert_eq!(parse_poly(&f, "-T + T").unwrap(), PolyA::zero(&f));
        assert_eq!(parse_poly(&f, "2*T^7 - 2*T").unwrap(), PolyA::t_q_minus_t(&f).scale(2));
        let f9 = Fq::of_order(9).unwrap();
        let b = parse_poly(&f9, "[1,2]*T + [0,1]").unwrap();
        assert_eq!(b.coeffs(), &[3, 7]);
        assert_eq!(parse_poly(&f9, &b.to_string()).unwrap(), b);
    }

    #[test]
    fn errors_carry_position() {
        let f = Fq::of_order(7).unwrap();
        match parse_poly(&f, "T^2 + * 3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly(&f, "T^").is_err());
        assert!(parse_poly(&f, "3T").is_err());
        assert!(parse_poly(&f, "").is_err());
        assert!(parse_poly(&f, "[1,2]").is_err());
        assert!(parse_poly(&f, "x + 1").is_err());
    }

    #[test]
    fn prime_poly() {
        assert_eq!(parse_prime_poly(3, "u^2 + 1").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_prime_poly(3, "u^2 - u - 1").unwrap(), vec![2, 2, 1]);
    }
}
