//! Small-integer helpers shared across modules.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorisation by trial division; intended for conductors and
/// element orders, not for large inputs.
pub fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor_small(n).into_iter().map(|(p, _)| p).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    factor_small(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factor_small(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factor_small(n) {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

pub fn is_prime_small(n: u64) -> bool {
    n >= 2 && factor_small(n).len() == 1 && factor_small(n)[0].1 == 1
}

/// `a mod n` for signed `a`, result in `0..n`.
pub fn rem_euclid(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}
