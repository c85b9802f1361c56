//! Counting primes `p ≤ x` for which a product of cyclotomic values at `p`
//! avoids square factors.
//!
//! Two independent routes are provided: factoring each `Φ_k(p)` and merging
//! exponents, and a square sieve that marks `p ≡ r (mod q²)` for every root
//! `r` of the relevant factors modulo `q²`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::density::{cyclotomic_roots_mod_prime, cyclotomic_value, lift_root};
use super::primes::{factor_u128, primes_up_to};
use super::NumTheoryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// `F(p)` has no square factor `q²` with `q > 3`.
    Thm51,
    /// `(p²+1)(p²−p+1)(p²+p+1)` is squarefree.
    Cor13,
}

impl Condition {
    pub fn indices(self) -> &'static [u32] {
        match self {
            Condition::Thm51 => &[1, 2, 3, 4, 6],
            Condition::Cor13 => &[3, 4, 6],
        }
    }

    fn ignores_2_3(self) -> bool {
        matches!(self, Condition::Thm51)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Thm51 => "thm51",
            Condition::Cor13 => "cor13",
        })
    }
}

impl FromStr for Condition {
    type Err = NumTheoryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "thm51" => Ok(Condition::Thm51),
            "cor13" => Ok(Condition::Cor13),
            _ => Err(NumTheoryError::UnknownCondition(s.to_string())),
        }
    }
}

/// Outcome for one prime: `witness` is the smallest `q` with `q²` dividing
/// the tested value (`None` when the condition holds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeStatus {
    pub p: u64,
    pub witness: Option<u64>,
}

impl PrimeStatus {
    pub fn passes(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub bound: u64,
    pub condition: Condition,
    pub count: u64,
    pub total_primes: u64,
    pub log: Vec<PrimeStatus>,
}

fn status_by_factoring(p: u64, cond: Condition) -> PrimeStatus {
    let mut merged: BTreeMap<u128, u32> = BTreeMap::new();
    for &k in cond.indices() {
        let v = cyclotomic_value(k, p).expect("supported index");
        if v == 0 {
            continue;
        }
        for (q, e) in factor_u128(v) {
            *merged.entry(q).or_insert(0) += e;
        }
    }
    let witness = merged
        .iter()
        .find(|(&q, &e)| e >= 2 && !(cond.ignores_2_3() && q <= 3))
        .map(|(&q, _)| q as u64);
    PrimeStatus { p, witness }
}

/// Census by factoring each cyclotomic value at every prime `p ≤ x`.
pub fn count_n(x: u64, cond: Condition) -> Result<Census, NumTheoryError> {
    if x < 2 {
        return Err(NumTheoryError::BoundTooSmall(x));
    }
    let primes = primes_up_to(x);
    let log: Vec<PrimeStatus> = primes.par_iter().map(|&p| status_by_factoring(p, cond)).collect();
    Ok(finish(x, cond, log))
}

/// Census by the square sieve; independent of any factorisation.
pub fn count_n_by_sieve(x: u64, cond: Condition) -> Result<Census, NumTheoryError> {
    if x < 2 {
        return Err(NumTheoryError::BoundTooSmall(x));
    }
    let primes = primes_up_to(x);
    let index: BTreeMap<u64, usize> = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut witness: Vec<Option<u64>> = vec![None; primes.len()];
    // q² can only divide a value below x² + x + 1, so q ≤ x + 1 suffices.
    let sieve_primes = primes_up_to(x + 1);
    let small_q = |q: u64| q <= 3;
    for &q in &sieve_primes {
        if cond.ignores_2_3() && small_q(q) {
            continue;
        }
        let m = q * q;
        let roots: Vec<u64> = if small_q(q) {
            (0..m).filter(|&a| brute_small(a, q, cond)).collect()
        } else {
            cond.indices()
                .iter()
                .flat_map(|&k| {
                    cyclotomic_roots_mod_prime(k, q).into_iter().map(move |r| lift_root(k, r, q))
                })
                .collect()
        };
        for r in roots {
            let mut p = r;
            while p <= x {
                if let Some(&i) = index.get(&p) {
                    if witness[i].is_none() {
                        witness[i] = Some(q);
                    }
                }
                p += m;
            }
        }
    }
    let log = primes
        .iter()
        .zip(witness)
        .map(|(&p, witness)| PrimeStatus { p, witness })
        .collect();
    Ok(finish(x, cond, log))
}

/// Direct test of `q² | ∏ Φ_k(a)` for tiny `q`, in signed arithmetic.
fn brute_small(a: u64, q: u64, cond: Condition) -> bool {
    let m = (q * q) as i128;
    let a = a as i128;
    let val = |k: u32| -> i128 {
        match k {
            1 => a - 1,
            2 => a + 1,
            3 => a * a + a + 1,
            4 => a * a + 1,
            6 => a * a - a + 1,
            _ => unreachable!("unsupported index"),
        }
    };
    cond.indices().iter().fold(1i128, |acc, &k| acc * val(k) % m).rem_euclid(m) == 0
}

fn finish(bound: u64, condition: Condition, log: Vec<PrimeStatus>) -> Census {
    let count = log.iter().filter(|s| s.passes()).count() as u64;
    Census { bound, condition, count, total_primes: log.len() as u64, log }
}
