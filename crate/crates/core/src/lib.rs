//! Exact algorithms around the prime graph question for integral group
//! rings: cyclotomic arithmetic, skew tableaux and Littlewood–Richardson
//! coefficients, HeLP partial augmentation analysis, Brauer tree
//! inequalities, per-pair verdicts and the number-theoretic census.

pub mod arith;
pub mod brauer;
pub mod cyclotomic;
pub mod decimal;
pub mod fixtures;
pub mod help;
pub mod numtheory;
pub mod selftest;
pub mod tableaux;

pub use cyclotomic::{CyclotomicElement, CyclotomicError};
