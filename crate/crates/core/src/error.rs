use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid level {n}: {reason}")]
    InvalidLevel { n: u64, reason: &'static str },
    #[error("{m} is not a divisor of {n} greater than 1")]
    InvalidDivisor { n: u64, m: u64 },
    #[error("gcd of ({a}, {b}) is {g}, expected 1")]
    NotCoprime { a: String, b: String, g: String },
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(String),
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("value {0} is too large for direct summation")]
    TooLarge(String),
    #[error("determinant of {0} is not 1")]
    Determinant(String),
    #[error("matrix {matrix} is not in {group}")]
    NotInGroup { matrix: String, group: String },
    #[error("{0} is not a prime divisor of the level")]
    NotPrimeDivisor(u64),
    #[error("prime {l} is not admissible for a Hecke operator at level {n}")]
    HeckePrime { l: u64, n: u64 },
    #[error("({c}, {d}) does not define a point of P1(Z/{n}Z)")]
    NotInP1 { c: String, d: String, n: u64 },
    #[error("{k} is not a unit modulo {modulus}")]
    NotUnit { k: i64, modulus: u64 },
    #[error("no shape matches class ({c}, {d}) at level {m}")]
    Unclassified { c: u64, d: u64, m: u64 },
    #[error("coefficient {value} at class ({c}, {d}) is not integral")]
    NonIntegral { c: u64, d: u64, value: String },
    #[error("numeric integration failed: {0}")]
    Numeric(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}
