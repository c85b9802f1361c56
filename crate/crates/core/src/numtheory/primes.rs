//! Prime sieve, Miller–Rabin and Pollard–Brent factorisation on `u128`.

use std::collections::BTreeMap;

use crate::arith::gcd;

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return ((a % m) * (b % m)) % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut r = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            r = add_mod(r, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    r
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with the first thirteen prime bases. This is a proof of
/// primality for `n < 3.3·10^24`; above that it is a strong probable-prime
/// test.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A non-trivial factor of the odd composite `n` (Brent's variant).
fn pollard_brent(n: u128) -> u128 {
    let mut c = 1u128;
    loop {
        let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
        let (mut y, mut r, mut q) = (2u128, 1u64, 1u128);
        let (mut g, mut x, mut ys) = (1u128, 0u128, 0u128);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(r - k).min(128) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd128(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd128(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

const TRIAL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Complete factorisation of `n >= 1` as prime → exponent.
pub fn factor_u128(mut n: u128) -> BTreeMap<u128, u32> {
    let mut out = BTreeMap::new();
    for &p in &TRIAL_PRIMES {
        let p = p as u128;
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        if let Some(r) = perfect_square_root(m) {
            stack.push(r);
            stack.push(r);
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

fn perfect_square_root(n: u128) -> Option<u128> {
    let mut r = (n as f64).sqrt() as u128;
    while r.checked_mul(r).map_or(true, |s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Square root of `a` modulo an odd prime `p`, if one exists.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let (a, p128) = ((a % p) as u128, p as u128);
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p128 - 1) / 2, p128) != 1 {
        return None;
    }
    let mut q = p128 - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p128).find(|&z| pow_mod(z, (p128 - 1) / 2, p128) == p128 - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p128);
    let mut t = pow_mod(a, q, p128);
    let mut r = pow_mod(a, (q + 1) / 2, p128);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p128);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p128);
        m = i;
        c = mul_mod(b, b, p128);
        t = mul_mod(t, c, p128);
        r = mul_mod(r, b, p128);
    }
    Some(r as u64)
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if gcd(a % m, m) != 1 {
        return None;
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_counts() {
        assert_eq!(primes_up_to(1000).len(), 168);
        assert_eq!(primes_up_to(100_000).len(), 9592);
        assert!(primes_up_to(1).is_empty());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
        assert!(is_prime(18446744073709551557)); // largest prime below 2^64
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime(170141183460469231731687303715884105727)); // 2^127 - 1
    }

    #[test]
    fn factorisation_round_trip() {
        for n in [1u128, 12, 7280, 600851475143, 18446744073709551617, (1u128 << 100) + 1] {
            let f = factor_u128(n);
            let prod: u128 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(prod, n);
            assert!(f.keys().all(|&p| is_prime(p)));
        }
        assert_eq!(factor_u128(7280), BTreeMap::from([(2, 4), (5, 1), (7, 1), (13, 1)]));
    }

    #[test]
    fn modular_square_roots() {
        for p in [5u64, 13, 17, 97, 1009, 999_983] {
            if let Some(r) = sqrt_mod(p - 1, p) {
                assert_eq!((r as u128 * r as u128) % p as u128, (p - 1) as u128);
            }
        }
        assert_eq!(sqrt_mod(2, 5), None);
    }
}
