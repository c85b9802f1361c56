//! The two integer inequalities closing the argument for a unit of order
//! `p·q` when `G` has no element of that order:
//! `pq ≥ ν(y)(1 + ε_p(q − 1))` and `0 ≤ ν(y)(ε_p − 1)`, where `ε_p` is the
//! total partial augmentation of the unit at the `p`-elements and `y` is an
//! element of order `p`.

use crate::arith::is_prime_small;

/// `(pq ≥ ν(1 + ε(q−1)), 0 ≤ ν(ε − 1))`.
pub fn proof_inequalities(p: u64, q: u64, nu: i64, eps: i64) -> (bool, bool) {
    let (p, q) = (p as i128, q as i128);
    let (nu, eps) = (nu as i128, eps as i128);
    (p * q >= nu * (1 + eps * (q - 1)), nu * (eps - 1) >= 0)
}

/// `ε_p ≡ 0 (mod p)` and `ε_p ≡ 1 (mod q)`.
pub fn epsilon_admissible(p: u64, q: u64, eps: i64) -> bool {
    eps.rem_euclid(p as i64) == 0 && eps.rem_euclid(q as i64) == 1 % q as i64
}

/// Non-zero values `ν ≡ 0 (mod p)` that survive both inequalities for some
/// admissible `ε_p`, as `(ν, ε_p)` pairs.
///
/// Admissible `ε_p` satisfy `|ε_p| ≥ p`, so `|1 + ε_p(q − 1)| ≥ 1` and
/// `|ν| ≤ pq`; the admissible bound on `|ν|` only shrinks as `|ε_p|` grows,
/// so scanning `|ε_p| ≤ 2pq + p` is exhaustive.
pub fn surviving_nu_values(p: u64, q: u64) -> Vec<(i64, i64)> {
    assert!(is_prime_small(p) && is_prime_small(q) && p != q, "p and q must be distinct primes");
    let (pi, qi) = (p as i64, q as i64);
    let window = 2 * pi * qi + pi;
    let mut out = Vec::new();
    for eps in -window..=window {
        if !epsilon_admissible(p, q, eps) {
            continue;
        }
        let mut nu = -pi * qi;
        while nu <= pi * qi {
            if nu != 0 {
                let (a, b) = proof_inequalities(p, q, nu, eps);
                if a && b {
                    out.push((nu, eps));
                }
            }
            nu += pi;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_values() {
        assert!(epsilon_admissible(5, 7, 15));
        assert!(epsilon_admissible(5, 7, -20));
        assert!(!epsilon_admissible(5, 7, 5));
        assert!(epsilon_admissible(5, 2, -5));
    }

    #[test]
    fn large_primes_force_zero() {
        for (p, q) in [(5, 2), (5, 3), (5, 7), (7, 2), (7, 11), (11, 13), (13, 5)] {
            assert!(surviving_nu_values(p, q).is_empty(), "p={p} q={q}");
        }
    }

    #[test]
    fn three_admits_survivors() {
        // ε = −3, ν = −3: 6 ≥ −3·(1 − 3) = 6 and 0 ≤ −3·(−4)
        assert!(surviving_nu_values(3, 2).contains(&(-3, -3)));
    }
}
