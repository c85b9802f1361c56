//! Orders of the seven Lie-type series and the squarefreeness conditions
//! under which the prime graph question is settled for them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::factored::{alpha, FactoredInteger};
use super::primes::factor_u128;
use super::NumTheoryError;
use crate::arith::gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieFamily {
    PSL4,
    PSU4,
    PSp4,
    PSp6,
    POmega7,
    POmega8plus,
    G2,
}

/// Row of the family table: power of `q`, exponents of `Φ_1, Φ_2, Φ_3, Φ_4,
/// Φ_6` in `|G|`, and the cyclotomic indices whose product the lemma tests.
struct FamilyData {
    q_power: u32,
    phi_exponents: [(u32, u32); 5],
    tested: &'static [u32],
}

impl LieFamily {
    pub const ALL: [LieFamily; 7] = [
        LieFamily::PSL4,
        LieFamily::PSU4,
        LieFamily::PSp4,
        LieFamily::PSp6,
        LieFamily::POmega7,
        LieFamily::POmega8plus,
        LieFamily::G2,
    ];

    fn data(self) -> FamilyData {
        use LieFamily::*;
        let (q_power, e, tested): (u32, [u32; 5], &'static [u32]) = match self {
            PSL4 => (6, [3, 2, 1, 1, 0], &[3, 4]),
            PSU4 => (6, [2, 3, 0, 1, 1], &[4, 6]),
            PSp4 => (4, [2, 2, 0, 1, 0], &[4]),
            PSp6 | POmega7 => (9, [3, 3, 1, 1, 1], &[3, 6]),
            POmega8plus => (12, [4, 4, 1, 2, 1], &[3, 6]),
            G2 => (6, [2, 2, 1, 0, 1], &[3, 6]),
        };
        let ks = [1, 2, 3, 4, 6];
        let mut phi_exponents = [(0, 0); 5];
        for i in 0..5 {
            phi_exponents[i] = (ks[i], e[i]);
        }
        FamilyData { q_power, phi_exponents, tested }
    }

    /// The small number `d` dividing out the centre.
    fn centre(self, q: u128) -> u128 {
        use LieFamily::*;
        let g = |a: u128, b: u128| gcd(a as u64, (b % a) as u64) as u128;
        match self {
            PSL4 => g(4, q - 1),
            PSU4 => g(4, q + 1),
            PSp4 | PSp6 => g(2, q - 1),
            POmega7 => g(2, q + 1),
            // q⁴ − 1 is divisible by 16 for odd q and is odd otherwise
            POmega8plus => if q % 2 == 1 { 4 } else { 1 },
            G2 => 1,
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for LieFamily {
    type Err = NumTheoryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LieFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| NumTheoryError::UnknownFamily(s.to_string()))
    }
}

/// A group of the given family over the field with `q = p^f` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieSeriesSpec {
    pub family: LieFamily,
    pub p: u64,
    pub f: u32,
}

/// Largest field size accepted; keeps every `Φ_k(q)` product within `u128`.
pub const MAX_Q: u128 = 1 << 30;

impl LieSeriesSpec {
    pub fn new(family: LieFamily, q: u64) -> Result<Self, NumTheoryError> {
        if q < 2 || q as u128 > MAX_Q {
            return Err(NumTheoryError::NotPrimePower(q));
        }
        let fac = factor_u128(q as u128);
        if fac.len() != 1 {
            return Err(NumTheoryError::NotPrimePower(q));
        }
        let (&p, &f) = fac.iter().next().expect("one prime");
        Ok(LieSeriesSpec { family, p: p as u64, f })
    }

    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.f)
    }
}

fn phi(k: u32, q: u128) -> u128 {
    match k {
        1 => q - 1,
        2 => q + 1,
        3 => q * q + q + 1,
        4 => q * q + 1,
        6 => q * q - q + 1,
        _ => unreachable!("family tables only use 1, 2, 3, 4, 6"),
    }
}

/// `|G|` assembled from the factored cyclotomic pieces.
pub fn lie_order(spec: &LieSeriesSpec) -> Result<FactoredInteger, NumTheoryError> {
    let q = spec.q();
    let data = spec.family.data();
    let mut order =
        FactoredInteger::from_factors(BTreeMap::from([(spec.p as u128, spec.f * data.q_power)]));
    for (k, e) in data.phi_exponents {
        let piece = FactoredInteger::from_u128(phi(k, q))?;
        for _ in 0..e {
            order = order.mul(&piece);
        }
    }
    order.div_exact(spec.family.centre(q))
}

/// `|G|` from the unexpanded product `q^N ∏ (q^{d_i} − 1)`, as a check on
/// the factored table.
pub fn lie_order_direct(spec: &LieSeriesSpec) -> BigUint {
    use LieFamily::*;
    let q = BigUint::from(spec.q());
    let one = BigUint::from(1u32);
    let m = |k: u32| q.pow(k) - &one;
    let pl = |k: u32| q.pow(k) + &one;
    let num = match spec.family {
        PSL4 => q.pow(6) * m(2) * m(3) * m(4),
        PSU4 => q.pow(6) * m(2) * pl(3) * m(4),
        PSp4 => q.pow(4) * m(2) * m(4),
        PSp6 | POmega7 => q.pow(9) * m(2) * m(4) * m(6),
        POmega8plus => q.pow(12) * m(2) * m(4) * m(6) * m(4),
        G2 => q.pow(6) * m(6) * m(2),
    };
    let d = match spec.family {
        PSL4 => gcd_big(4, &m(1)),
        PSU4 => gcd_big(4, &pl(1)),
        PSp4 | PSp6 => gcd_big(2, &m(1)),
        POmega7 => gcd_big(2, &pl(1)),
        POmega8plus => gcd_big(4, &m(4)),
        G2 => one.clone(),
    };
    num / d
}

fn gcd_big(a: u32, b: &BigUint) -> BigUint {
    use num_integer::Integer;
    BigUint::from(a).gcd(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LieVerdictKind {
    Settled,
    NotSettledByLemma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieVerdict {
    pub spec: LieSeriesSpec,
    pub q: u128,
    /// `α(f)`.
    pub c: u128,
    /// Product of the lemma's cyclotomic values at `q`.
    pub polynomial_value: u128,
    pub alpha_value: FactoredInteger,
    pub c_squarefree: bool,
    pub c_coprime: bool,
    pub alpha_squarefree: bool,
    pub verdict: LieVerdictKind,
}

pub fn lie_series_verdict(spec: &LieSeriesSpec) -> Result<LieVerdict, NumTheoryError> {
    let q = spec.q();
    let c = alpha(spec.f as u128);
    let polynomial_value: u128 = spec.family.data().tested.iter().map(|&k| phi(k, q)).product();
    let alpha_value = FactoredInteger::from_u128(alpha(polynomial_value))?;
    let c_squarefree = FactoredInteger::from_u128(c)?.is_squarefree();
    let c_coprime = gcd_u128(c, polynomial_value) == 1;
    let alpha_squarefree = alpha_value.is_squarefree();
    let verdict = if c_squarefree && c_coprime && alpha_squarefree {
        LieVerdictKind::Settled
    } else {
        LieVerdictKind::NotSettledByLemma
    };
    Ok(LieVerdict {
        spec: *spec,
        q,
        c,
        polynomial_value,
        alpha_value,
        c_squarefree,
        c_coprime,
        alpha_squarefree,
        verdict,
    })
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieFamily::*;

    fn spec(f: LieFamily, q: u64) -> LieSeriesSpec {
        LieSeriesSpec::new(f, q).unwrap()
    }

    #[test]
    fn small_orders() {
        let cases: [(LieFamily, u64, u128); 9] = [
            (PSL4, 2, 20160),
            (PSp4, 2, 720),
            (PSU4, 2, 25920),
            (PSL4, 3, 6065280),
            (PSp6, 2, 1451520),
            (POmega7, 3, 4585351680),
            (POmega8plus, 2, 174182400),
            (G2, 3, 4245696),
            (PSp4, 3, 25920),
        ];
        for (f, q, n) in cases {
            let o = lie_order(&spec(f, q)).unwrap();
            assert_eq!(o.value(), &BigUint::from(n), "{f}({q})");
            assert!(o.is_consistent());
        }
    }

    #[test]
    fn factored_and_direct_orders_agree() {
        for f in LieFamily::ALL {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 49, 64, 81, 101, 125] {
                let s = spec(f, q);
                assert_eq!(lie_order(&s).unwrap().value(), &lie_order_direct(&s), "{f}({q})");
            }
        }
    }

    #[test]
    fn g2_at_five() {
        let v = lie_series_verdict(&spec(G2, 5)).unwrap();
        assert_eq!(v.polynomial_value, 31 * 21);
        assert_eq!(v.alpha_value.value(), &BigUint::from(217u32));
        assert_eq!(v.verdict, LieVerdictKind::Settled);
    }

    #[test]
    fn listed_groups() {
        let settled = [
            (PSL4, 3),
            (PSp4, 4),
            (PSp4, 5),
            (PSp4, 9),
            (PSp6, 2),
            (PSU4, 2),
            (PSU4, 3),
            (PSU4, 4),
            (PSU4, 5),
            (POmega8plus, 2),
            (G2, 3),
            (G2, 4),
        ];
        for (f, q) in settled {
            assert_eq!(lie_series_verdict(&spec(f, q)).unwrap().verdict, LieVerdictKind::Settled, "{f}({q})");
        }
        // α(7² + 1) = 25
        let v = lie_series_verdict(&spec(PSp4, 7)).unwrap();
        assert_eq!(v.verdict, LieVerdictKind::NotSettledByLemma);
        assert!(!v.alpha_squarefree);
    }

    #[test]
    fn coprimality_clause() {
        // q = 2^5: c = 5 and 5 | 32² + 1
        let v = lie_series_verdict(&spec(PSp4, 32)).unwrap();
        assert_eq!(v.c, 5);
        assert!(!v.c_coprime);
        assert_eq!(v.verdict, LieVerdictKind::NotSettledByLemma);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(LieSeriesSpec::new(PSL4, 6).is_err());
        assert!(LieSeriesSpec::new(PSL4, 1).is_err());
        assert_eq!("pomega8plus".parse::<LieFamily>().unwrap(), POmega8plus);
        assert!("E8".parse::<LieFamily>().is_err());
    }
}
