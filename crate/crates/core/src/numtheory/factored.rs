use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::primes::{factor_u128, primes_up_to};
use super::NumTheoryError;

/// A non-negative integer together with its complete factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredInteger {
    value: BigUint,
    factors: BTreeMap<u128, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger { value: BigUint::one(), factors: BTreeMap::new() }
    }

    pub fn from_u128(n: u128) -> Result<Self, NumTheoryError> {
        if n == 0 {
            return Err(NumTheoryError::Zero);
        }
        Ok(FactoredInteger { value: BigUint::from(n), factors: factor_u128(n) })
    }

    pub fn from_factors(factors: BTreeMap<u128, u32>) -> Self {
        let mut value = BigUint::one();
        for (p, e) in &factors {
            value *= BigUint::from(*p).pow(*e);
        }
        let factors = factors.into_iter().filter(|(_, e)| *e > 0).collect();
        FactoredInteger { value, factors }
    }

    /// Factors a big integer by trial division with primes below `10^6`;
    /// the cofactor must then fit in 128 bits.
    pub fn from_biguint(n: &BigUint) -> Result<Self, NumTheoryError> {
        if n.is_zero() {
            return Err(NumTheoryError::Zero);
        }
        if let Some(small) = n.to_u128() {
            return Self::from_u128(small);
        }
        let mut rest = n.clone();
        let mut factors = BTreeMap::new();
        for p in primes_up_to(1_000_000) {
            let bp = BigUint::from(p);
            loop {
                let (q, r) = rest.div_rem(&bp);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                *factors.entry(p as u128).or_insert(0) += 1;
            }
            if rest.is_one() {
                break;
            }
        }
        let cof = rest
            .to_u128()
            .ok_or_else(|| NumTheoryError::TooLarge(n.to_string()))?;
        for (p, e) in factor_u128(cof) {
            *factors.entry(p).or_insert(0) += e;
        }
        Ok(FactoredInteger { value: n.clone(), factors })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<u128, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.keys().copied()
    }

    pub fn exponent(&self, p: u128) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            *factors.entry(*p).or_insert(0) += e;
        }
        FactoredInteger { value: &self.value * &other.value, factors }
    }

    /// Exact division; fails if `d` does not divide the value.
    pub fn div_exact(&self, d: u128) -> Result<FactoredInteger, NumTheoryError> {
        let mut factors = self.factors.clone();
        for (p, e) in factor_u128(d) {
            let slot = factors.entry(p).or_insert(0);
            if *slot < e {
                return Err(NumTheoryError::NotDivisible { d, n: self.value.to_string() });
            }
            *slot -= e;
        }
        Ok(Self::from_factors(factors))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.values().all(|&e| e < 2)
    }

    pub fn is_squarefree_above3(&self) -> bool {
        self.factors.iter().all(|(&p, &e)| p <= 3 || e < 2)
    }

    /// Smallest prime whose square divides the value, optionally ignoring
    /// 2 and 3.
    pub fn square_witness(&self, skip_2_3: bool) -> Option<u128> {
        self.factors
            .iter()
            .find(|(&p, &e)| e >= 2 && !(skip_2_3 && p <= 3))
            .map(|(&p, _)| p)
    }

    /// Checks the stored factorisation against the stored value.
    pub fn is_consistent(&self) -> bool {
        Self::from_factors(self.factors.clone()).value == self.value
            && self.factors.keys().all(|&p| super::primes::is_prime(p))
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `n` with all factors 2 and 3 removed: the largest divisor coprime to 6.
pub fn alpha(mut n: u128) -> u128 {
    assert!(n >= 1, "alpha is defined for positive integers");
    while n % 2 == 0 {
        n /= 2;
    }
    while n % 3 == 0 {
        n /= 3;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_predicates() {
        let twelve = FactoredInteger::from_u128(12).unwrap();
        assert!(!twelve.is_squarefree());
        assert!(twelve.is_squarefree_above3());
        let thirty = FactoredInteger::from_u128(30).unwrap();
        assert!(thirty.is_squarefree() && thirty.is_squarefree_above3());
        let f3 = FactoredInteger::from_u128(7280).unwrap();
        assert!(f3.is_squarefree_above3());
        assert!(FactoredInteger::from_u128(0).is_err());
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(360), 5);
        assert_eq!(alpha(1), 1);
        assert_eq!(alpha(35), 35);
    }

    #[test]
    fn big_values() {
        let n: BigUint = "808017424794512875886459904961710757005754368000000000".parse().unwrap();
        let f = FactoredInteger::from_biguint(&n).unwrap();
        assert_eq!(f.exponent(2), 46);
        assert_eq!(f.exponent(71), 1);
        assert!(f.is_consistent());
    }

    #[test]
    fn exact_division() {
        let f = FactoredInteger::from_u128(720).unwrap();
        assert_eq!(f.div_exact(2).unwrap().value(), &BigUint::from(360u32));
        assert!(f.div_exact(7).is_err());
    }
}
