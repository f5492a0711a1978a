//! Finite fields, A = F_q[T], its primes, residue fields and their extensions.

pub mod ext;
pub mod field;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod prime;
pub mod quotient;
pub mod residue;

pub use ext::{ExtCache, ExtField};
pub use field::{FieldSpec, FiniteField, Fq};
pub use linalg::{Matrix, Solution};
pub use parse::{parse_poly, parse_prime_poly};
pub use poly::{Degree, PolyA};
pub use prime::{enum_primes, residue_reduce, PrimeIdeal};
pub use quotient::QuotientRing;
pub use residue::ResidueField;

/// Monic gcd in A; fails only when both inputs are zero.
pub fn poly_gcd(a: &PolyA, b: &PolyA) -> crate::Result<PolyA> {
    a.gcd(b)
}
