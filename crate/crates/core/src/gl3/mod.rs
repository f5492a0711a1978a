//! Group theory of GL₃ over finite fields.

pub mod brute;
pub mod coset;
pub mod orders;
pub mod sieve;
pub mod subring;

pub use brute::{normal_solvable_center_check, Gl3Group, NormalSolvableReport, NormalSubgroupInfo};
pub use coset::{coset_trace_test, field_isomorphisms, inverse_charpoly, CosetOutcome};
pub use orders::{classical_orders, gl3_order, ClassicalOrders, GroupOrder};
pub use sieve::{aschbacher_sieve, ClassResult, ClassVerdict, SieveEvidence, SieveVerdict};
pub use subring::{subring_generated, SubringReport};
