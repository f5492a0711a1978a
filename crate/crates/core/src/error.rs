use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not a prime: {0}")]
    NotPrime(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ring mismatch: operands live over different coefficient rings")]
    RingMismatch,
    #[error("bad reduction: {0}")]
    BadReduction(String),
    #[error("ramified: {0}")]
    Ramified(String),
    #[error("internal: charpoly system degenerate ({0})")]
    DegenerateCharpoly(String),
    #[error("kernel dimension {found}, expected {expected}")]
    KernelDimension { expected: usize, found: usize },
    #[error("extension search overflow: no splitting degree up to {0}")]
    ExtensionOverflow(usize),
    #[error("irreducibility certificate failed: {0}")]
    CertificateFailed(String),
    #[error("criterion requires p != 3")]
    CharacteristicThree,
    #[error("too few usable degree-1 primes: {0}")]
    TooFewPrimes(usize),
    #[error("degree cap exceeded: {0}")]
    DegreeCap(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("Newton polygon needs at least two finite points")]
    TooFewPoints,
}
