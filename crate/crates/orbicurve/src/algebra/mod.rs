//! Exact arithmetic over finite fields and univariate rational functions,
//! including Artin-Schreier reduction. Substrate for the explicit-cover
//! oracle. All values are immutable and all operations pure.

pub mod asreduce;
pub mod field;
pub mod poly;
pub mod ratfunc;

pub use asreduce::{as_reduce, AsReduction};
pub use field::{Fq, FqElem};
pub use poly::Poly;
pub use ratfunc::{Place, RationalFunction};

#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgebraError {
    #[error("NOT_PRIME: {0} is not prime")]
    NotPrime(u64),
    #[error("NOT_PRIME_POWER: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("BAD_MODULUS: {0}")]
    BadModulus(String),
    #[error("BAD_ELEMENT: {0}")]
    BadElement(String),
    #[error("ZERO_DENOMINATOR: rational function denominator is zero")]
    ZeroDenominator,
    #[error("UNSUPPORTED_POLE: {0}")]
    UnsupportedPole(String),
}
