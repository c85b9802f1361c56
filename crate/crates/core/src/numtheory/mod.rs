//! Squarefree values of cyclotomic polynomials at primes: the census `N(x)`,
//! root counts `ρ`, the constant `c`, `Li(x)`, and the Lie-type series.

pub mod census;
pub mod density;
pub mod factored;
pub mod li;
pub mod lie;
pub mod primes;

use thiserror::Error;

pub use census::{count_n, count_n_by_sieve, Census, Condition, PrimeStatus};
pub use density::{constant_c, constant_c_float, cyclotomic_value, rho, tail_bound, ConstantC};
pub use factored::{alpha, FactoredInteger};
pub use li::{li, li_by_series};
pub use lie::{lie_order, lie_series_verdict, LieFamily, LieSeriesSpec, LieVerdict, LieVerdictKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumTheoryError {
    #[error("zero has no factorisation")]
    Zero,
    #[error("cofactor of {0} exceeds 128 bits after trial division")]
    TooLarge(String),
    #[error("{d} does not divide {n}")]
    NotDivisible { d: u128, n: String },
    #[error("cyclotomic index {0} is not one of 1, 2, 3, 4, 6")]
    UnsupportedIndex(u32),
    #[error("truncation {0} is below 5")]
    TruncationTooSmall(u64),
    #[error("bound {0} is below 2")]
    BoundTooSmall(u64),
    #[error("Li(x) needs x >= 2, got {0}")]
    LiDomain(f64),
    #[error("unknown condition {0:?} (expected cor13 or thm51)")]
    UnknownCondition(String),
    #[error("unknown Lie family {0:?}")]
    UnknownFamily(String),
    #[error("{0} is not a supported prime power")]
    NotPrimePower(u64),
}
