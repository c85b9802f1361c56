//! The polynomial `F(X) = (X²+1)(X⁶−1)`, its root counts `ρ(d)` modulo `d²`
//! and the Euler product `c`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::primes::{inv_mod, primes_up_to, sqrt_mod};
use super::NumTheoryError;
use crate::arith::factor_small;

/// The cyclotomic factors of `F`.
pub const F_INDICES: [u32; 5] = [1, 2, 3, 4, 6];

/// `Φ_k(q)` for `k ∈ {1, 2, 3, 4, 6}`.
pub fn cyclotomic_value(k: u32, q: u64) -> Result<u128, NumTheoryError> {
    let q = q as u128;
    Ok(match k {
        1 => q - 1,
        2 => q + 1,
        3 => q * q + q + 1,
        4 => q * q + 1,
        6 => q * q - q + 1,
        _ => return Err(NumTheoryError::UnsupportedIndex(k)),
    })
}

/// `F(a) mod m` computed without overflow for `m < 2^64`.
pub fn f_mod(a: u64, m: u64) -> u64 {
    let m = m as u128;
    let a = a as u128 % m;
    let a2 = a * a % m;
    let a6 = a2 * a2 % m * a2 % m;
    ((a2 + 1) % m * ((a6 + m - 1) % m) % m) as u64
}

/// `ρ(d)` by enumerating all residues modulo `d²`.
pub fn rho_by_enumeration(d: u64) -> u64 {
    let m = d * d;
    (0..m).filter(|&a| f_mod(a, m) == 0).count() as u64
}

/// Roots of `Φ_k` modulo the prime `q > 3` (each is simple).
pub fn cyclotomic_roots_mod_prime(k: u32, q: u64) -> Vec<u64> {
    let half = inv_mod(2, q).expect("q odd");
    match k {
        1 => vec![1],
        2 => vec![q - 1],
        4 => match sqrt_mod(q - 1, q) {
            Some(r) if r != 0 => vec![r.min(q - r), r.max(q - r)],
            _ => vec![],
        },
        3 | 6 => match sqrt_mod(q - 3, q) {
            Some(s) if s != 0 => {
                let sign = if k == 3 { q - 1 } else { 1 };
                let mut v: Vec<u64> = [s, q - s]
                    .iter()
                    .map(|&t| ((sign as u128 + t as u128) * half as u128 % q as u128) as u64)
                    .collect();
                v.sort_unstable();
                v
            }
            _ => vec![],
        },
        _ => vec![],
    }
}

/// Hensel lift of a simple root `r` of `Φ_k` mod `q` to a root mod `q²`.
pub fn lift_root(k: u32, r: u64, q: u64) -> u64 {
    let m = (q * q) as u128;
    let r = r as u128;
    let (f, df) = match k {
        1 => ((r + m - 1) % m, 1u128),
        2 => ((r + 1) % m, 1),
        3 => ((r * r + r + 1) % m, (2 * r + 1) % m),
        4 => ((r * r + 1) % m, (2 * r) % m),
        6 => ((r * r + m - r + 1) % m, (2 * r + m - 1) % m),
        _ => unreachable!("unsupported index"),
    };
    let inv = inv_mod((df % q as u128) as u64, q).expect("simple root") as u128;
    // r' = r - f(r)/f'(r); f(r) is divisible by q so only f(r)/q matters mod q
    let t = (f / q as u128) * inv % q as u128;
    ((r + m - t * q as u128 % m) % m) as u64
}

/// `ρ(d)`. Primes `q > 3` use root counting modulo `q` (every root of `F`
/// mod `q` is simple and lifts uniquely); other prime powers are enumerated
/// directly; composite `d` uses multiplicativity.
pub fn rho(d: u64) -> u64 {
    factor_small(d)
        .into_iter()
        .map(|(q, e)| {
            if e == 1 && q > 3 {
                F_INDICES
                    .iter()
                    .map(|&k| cyclotomic_roots_mod_prime(k, q).len() as u64)
                    .sum()
            } else {
                rho_by_enumeration(q.pow(e))
            }
        })
        .product()
}

/// Exact truncation `∏_{3<q≤Q} (1 − ρ(q)/φ(q²))` and its float shadow
/// computed independently in double precision.
#[derive(Clone, Debug)]
pub struct ConstantC {
    pub truncation: u64,
    pub exact: BigRational,
    pub float: f64,
}

pub fn constant_c(truncation: u64) -> Result<ConstantC, NumTheoryError> {
    if truncation < 5 {
        return Err(NumTheoryError::TruncationTooSmall(truncation));
    }
    let mut exact = BigRational::one();
    let mut float = 1.0f64;
    for q in primes_up_to(truncation).into_iter().filter(|&q| q > 3) {
        let r = rho(q);
        let phi = q * (q - 1);
        exact *= BigRational::new(BigInt::from(phi - r), BigInt::from(phi));
        float *= 1.0 - r as f64 / phi as f64;
    }
    Ok(ConstantC { truncation, exact, float })
}

/// Float-only truncation, for large `Q`.
pub fn constant_c_float(truncation: u64) -> f64 {
    primes_up_to(truncation)
        .into_iter()
        .filter(|&q| q > 3)
        .map(|q| 1.0 - rho(q) as f64 / (q * (q - 1)) as f64)
        .product()
}

/// Upper bound for `Σ_{q>Q} 16/q²`, namely `16/Q`.
pub fn tail_bound(truncation: u64) -> f64 {
    16.0 / truncation as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::q as rat;

    #[test]
    fn phi_values() {
        assert_eq!(cyclotomic_value(6, 2).unwrap(), 3);
        assert_eq!(cyclotomic_value(4, 3).unwrap(), 10);
        assert!(cyclotomic_value(5, 3).is_err());
        for q in 2..=100u64 {
            let prod: u128 = F_INDICES.iter().map(|&k| cyclotomic_value(k, q).unwrap()).product();
            let q = q as u128;
            assert_eq!(prod, (q * q + 1) * (q.pow(6) - 1));
        }
    }

    #[test]
    fn rho_of_five() {
        let roots: Vec<u64> = (0..25).filter(|&a| f_mod(a, 25) == 0).collect();
        assert_eq!(roots, vec![1, 7, 18, 24]);
        assert_eq!(rho(5), 4);
    }

    #[test]
    fn rho_small_primes_match_enumeration() {
        for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
            assert_eq!(rho(q), rho_by_enumeration(q), "q = {q}");
        }
    }

    #[test]
    fn lifted_roots_are_roots() {
        for q in [5u64, 13, 37, 61, 97, 9973] {
            for k in F_INDICES {
                for r in cyclotomic_roots_mod_prime(k, q) {
                    let l = lift_root(k, r, q);
                    let m = q as u128 * q as u128;
                    let v = cyclotomic_value(k, l).unwrap() % m;
                    assert_eq!(v, 0, "k={k} q={q} r={r}");
                }
            }
        }
    }

    #[test]
    fn c_at_five() {
        let c = constant_c(5).unwrap();
        assert_eq!(c.exact, rat(4, 5));
        assert!((c.float - 0.8).abs() < 1e-15);
        assert!(constant_c(4).is_err());
    }
}
