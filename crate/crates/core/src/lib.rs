//! Exact arithmetic for rank-3 Drinfeld modules over F_q[T] and a per-prime
//! certificate pipeline for surjectivity of their Galois representations.

pub mod algebra;
pub mod certify;
pub mod drinfeld;
pub mod error;
pub mod frobenius;
pub mod gl3;
pub mod irred;
pub mod skew;
pub mod valuation;

pub use algebra::{enum_primes, parse_poly, FieldSpec, FiniteField, Fq, PolyA, PrimeIdeal, QuotientRing, ResidueField};
pub use drinfeld::{classify_family, DrinfeldModule, FamilyClass, FamilyType, ReducedModule};
pub use error::{Error, Result};
pub use skew::{skew_mul, SkewPoly};
