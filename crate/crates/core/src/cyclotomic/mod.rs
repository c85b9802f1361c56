//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Elements are stored as rational combinations of powers of `ζ_n` and kept
//! in a canonical form: for every prime power `p^e ‖ n` the `p`-part of each
//! exponent (via CRT) must avoid one residue class of its top base-`p` digit.
//! This is the standard basis obtained from the relations
//! `Σ_j ζ^{a + j·n/p} = 0`, so two elements are equal iff their canonical
//! coefficient maps agree.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{euler_phi, factor_small, gcd, lcm, mobius, rem_euclid};

pub use parse::parse_cyclotomic;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("galois exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u64 },
    #[error("cannot parse cyclotomic value {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Rational number helper used throughout the crate.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    conductor: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

impl CyclotomicElement {
    /// Builds `Σ c·ζ_n^a`; exponents are reduced mod `n` and the result is
    /// brought to canonical form.
    pub fn make<I>(n: u64, terms: I) -> Result<Self, CyclotomicError>
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        if n == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let mut raw: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (a, c) in terms {
            let e = raw.entry(rem_euclid(a, n)).or_insert_with(BigRational::zero);
            *e += c;
        }
        Ok(Self::from_raw(n, raw))
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(n: u64, terms: &[(i64, i64)]) -> Result<Self, CyclotomicError> {
        Self::make(n, terms.iter().map(|&(a, c)| (a, BigRational::from_integer(c.into()))))
    }

    pub fn zero(n: u64) -> Self {
        Self { conductor: n.max(1), coeffs: BTreeMap::new() }
    }

    pub fn rational(n: u64, r: BigRational) -> Self {
        let n = n.max(1);
        let mut raw = BTreeMap::new();
        raw.insert(0, r);
        Self::from_raw(n, raw)
    }

    pub fn integer(n: u64, v: i64) -> Self {
        Self::rational(n, BigRational::from_integer(v.into()))
    }

    /// `ζ_n^a`.
    pub fn root_of_unity(n: u64, a: i64) -> Result<Self, CyclotomicError> {
        Self::make(n, [(a, BigRational::one())])
    }

    fn from_raw(n: u64, raw: BTreeMap<u64, BigRational>) -> Self {
        Self { conductor: n, coeffs: canonicalize(n, raw) }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(a, c)| (*a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Re-expresses the element over `Q(ζ_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.conductor == 0, "lift target {m} is not a multiple of {}", self.conductor);
        if m == self.conductor {
            return self.clone();
        }
        let f = m / self.conductor;
        let raw = self.coeffs.iter().map(|(a, c)| (a * f, c.clone())).collect();
        Self::from_raw(m, raw)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.conductor);
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, c * r)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::integer(self.conductor, 1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The automorphism `ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> Result<Self, CyclotomicError> {
        let n = self.conductor;
        let kk = rem_euclid(k, n);
        if gcd(kk, n) != 1 {
            return Err(CyclotomicError::NotCoprime { k, n });
        }
        let raw = self
            .coeffs
            .iter()
            .map(|(a, c)| (((*a as u128 * kk as u128) % n as u128) as u64, c.clone()))
            .collect();
        Ok(Self::from_raw(n, raw))
    }

    /// Absolute trace `Tr_{Q(ζ_n)/Q}` via the closed Möbius formula
    /// `Tr(ζ_n^a) = μ(n/g)·φ(n)/φ(n/g)`, `g = gcd(a, n)`.
    pub fn trace_to_q(&self) -> BigRational {
        let n = self.conductor;
        let phi_n = euler_phi(n);
        let mut acc = BigRational::zero();
        for (a, c) in &self.coeffs {
            let g = gcd(*a, n);
            let m = n / g;
            let t = mobius(m) * (phi_n / euler_phi(m)) as i64;
            if t != 0 {
                acc += c * BigRational::from_integer(t.into());
            }
        }
        acc
    }

    /// Trace as the sum of all Galois conjugates. Independent of
    /// [`trace_to_q`](Self::trace_to_q); returns `None` if the conjugate sum is
    /// not rational, which would indicate an arithmetic defect.
    pub fn trace_by_galois_sum(&self) -> Option<BigRational> {
        let n = self.conductor;
        let mut raw: BTreeMap<u64, BigRational> = BTreeMap::new();
        for k in (1..=n).filter(|&k| gcd(k, n) == 1) {
            for (a, c) in &self.coeffs {
                let e = ((*a as u128 * k as u128) % n as u128) as u64;
                *raw.entry(e).or_insert_with(BigRational::zero) += c;
            }
        }
        let sum = canonicalize(n, raw);
        // In canonical form the rational 1 has coefficient ±1 at the exponent
        // whose odd prime-power components are p^(e-1) and whose 2-part is 0.
        let factors = factor_small(n);
        let mut anchor = 0u64;
        let mut sign = BigRational::one();
        for &(p, e) in &factors {
            let pe = p.pow(e);
            let comp = if p == 2 { 0 } else { pe / p };
            if p != 2 {
                sign = -sign;
            }
            anchor = crt_adjust(anchor, comp, pe, n);
        }
        let r = sum.get(&anchor).cloned().unwrap_or_else(BigRational::zero) * sign;
        let expect = canonicalize(n, BTreeMap::from([(0u64, r.clone())]));
        if expect == sum {
            Some(r)
        } else {
            None
        }
    }

    /// Trace from the subfield `Q(ζ_m)` to `Q`. The caller guarantees the
    /// element lies in `Q(ζ_m)`; see [`lies_in`](Self::lies_in).
    pub fn trace_from_subfield(&self, m: u64) -> BigRational {
        let big = lcm(self.conductor, m);
        let x = self.lift(big);
        x.trace_to_q() * BigRational::new(euler_phi(m).into(), euler_phi(big).into())
    }

    /// Whether the element lies in the subfield `Q(ζ_m)` of its ambient field.
    pub fn lies_in(&self, m: u64) -> bool {
        let big = lcm(self.conductor, m);
        let x = self.lift(big);
        (1..=big)
            .filter(|&k| gcd(k, big) == 1 && k % m == 1 % m)
            .all(|k| x.galois(k as i64).map(|y| y == x).unwrap_or(false))
    }

    /// The rational value if the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        let r = self.trace_to_q() / BigRational::from_integer(euler_phi(self.conductor).into());
        if *self == Self::rational(self.conductor, r.clone()) {
            Some(r)
        } else {
            None
        }
    }

    /// Floating-point value at `ζ_n = e^{2πi/n}`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .map(|(a, c)| {
                let theta = 2.0 * std::f64::consts::PI * (*a as f64) / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    /// Complex conjugate, i.e. `galois(-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }
}

/// Adjusts `x` so that `x ≡ comp (mod pe)` without touching its residues
/// modulo the other prime powers of `n`.
fn crt_adjust(mut x: u64, comp: u64, pe: u64, n: u64) -> u64 {
    let step = n / pe;
    for _ in 0..pe {
        if x % pe == comp {
            return x;
        }
        x = (x + step) % n;
    }
    unreachable!("CRT adjustment did not converge")
}

/// Reduces a raw coefficient map over `Q(ζ_n)` to canonical form.
fn canonicalize(n: u64, mut raw: BTreeMap<u64, BigRational>) -> BTreeMap<u64, BigRational> {
    raw.retain(|_, c| !c.is_zero());
    for (p, e) in factor_small(n) {
        let pe = p.pow(e);
        let low = pe / p;
        let step = n / p;
        let bad_digit = if p == 2 { 1 } else { 0 };
        let bad: Vec<u64> = raw
            .keys()
            .copied()
            .filter(|a| (a % pe) / low == bad_digit)
            .collect();
        for a in bad {
            let c = match raw.remove(&a) {
                Some(c) => c,
                None => continue,
            };
            for j in 1..p {
                let b = (a + j * step) % n;
                let slot = raw.entry(b).or_insert_with(BigRational::zero);
                *slot -= &c;
                if slot.is_zero() {
                    raw.remove(&b);
                }
            }
        }
    }
    raw
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl<'a> Add<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        let (mut a, b) = self.common(rhs);
        for (e, c) in b.coeffs {
            let slot = a.coeffs.entry(e).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                a.coeffs.remove(&e);
            }
        }
        a
    }
}

impl<'a> Sub<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        let (a, b) = self.common(rhs);
        let n = a.conductor;
        let mut raw: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (e1, c1) in &a.coeffs {
            for (e2, c2) in &b.coeffs {
                *raw.entry((e1 + e2) % n).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        CyclotomicElement::from_raw(n, raw)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CyclotomicElement> for CyclotomicElement {
            type Output = CyclotomicElement;
            fn $m(self, rhs: CyclotomicElement) -> CyclotomicElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CyclotomicElement {
    /// Text form `c0 + c1*z^1 - c2*z^2 @ n`; rational values print as `r @ n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{} @ {}", fmt_rational(&r), self.conductor);
        }
        let mut first = true;
        for (a, c) in &self.coeffs {
            let body = if *a == 0 {
                fmt_rational(&c.abs())
            } else if c.abs().is_one() {
                format!("z^{a}")
            } else {
                format!("{}*z^{a}", fmt_rational(&c.abs()))
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        write!(f, " @ {}", self.conductor)
    }
}

impl std::str::FromStr for CyclotomicElement {
    type Err = CyclotomicError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cyclotomic(s)
    }
}

#[derive(Serialize)]
struct CyclotomicJson {
    conductor: u64,
    coeffs: BTreeMap<u64, String>,
}

impl Serialize for CyclotomicElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicJson {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, fmt_rational(c))).collect(),
        }
        .serialize(s)
    }
}

/// Accepts both the coefficient-map object and the textual form.
#[derive(Deserialize)]
#[serde(untagged)]
enum CyclotomicInput {
    Text(String),
    Integer(i64),
    // Keys stay strings: untagged buffering drops integer-key coercion.
    Map { conductor: u64, coeffs: BTreeMap<String, String> },
}

impl<'de> Deserialize<'de> for CyclotomicElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match CyclotomicInput::deserialize(d)? {
            CyclotomicInput::Text(s) => parse_cyclotomic(&s).map_err(D::Error::custom),
            CyclotomicInput::Integer(v) => Ok(CyclotomicElement::integer(1, v)),
            CyclotomicInput::Map { conductor, coeffs } => {
                let mut terms = Vec::new();
                for (a, c) in coeffs {
                    let a: i64 = a.parse().map_err(|_| D::Error::custom(format!("bad exponent {a:?}")))?;
                    let r = parse::parse_rational(&c).map_err(D::Error::custom)?;
                    terms.push((a, r));
                }
                CyclotomicElement::make(conductor, terms).map_err(D::Error::custom)
            }
        }
    }
}

/// Serde adapter writing values in the textual form, for use with
/// `#[serde(with = "...")]` on maps of cyclotomic values.
pub mod as_text_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::CyclotomicElement;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<String, CyclotomicElement>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let text: BTreeMap<&String, String> = m.iter().map(|(k, v)| (k, v.to_string())).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, CyclotomicElement>, D::Error> {
        BTreeMap::deserialize(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u64, t: &[(i64, i64)]) -> CyclotomicElement {
        CyclotomicElement::from_int_terms(n, t).unwrap()
    }

    #[test]
    fn zero_conductor_rejected() {
        assert_eq!(
            CyclotomicElement::from_int_terms(0, &[(1, 1)]).unwrap_err(),
            CyclotomicError::ZeroConductor
        );
    }

    #[test]
    fn exponent_reduction() {
        assert_eq!(el(6, &[(7, 2)]), el(6, &[(1, 2)]));
        let v = el(6, &[(7, 2)]).to_complex();
        assert!((v.re - 1.0).abs() < 1e-12 && (v.im - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sum_of_primitive_fifth_roots_is_minus_one() {
        let s = el(5, &[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(s, el(5, &[(0, -1)]));
        assert_eq!(s.as_rational(), Some(q(-1, 1)));
    }

    #[test]
    fn mixed_conductor_product() {
        let z2 = CyclotomicElement::root_of_unity(2, 1).unwrap();
        let z3 = CyclotomicElement::root_of_unity(3, 1).unwrap();
        let p = &z2 * &z3;
        assert_eq!(p.conductor(), 6);
        assert_eq!(p, CyclotomicElement::root_of_unity(6, 5).unwrap());
    }

    #[test]
    fn galois_requires_unit() {
        let x = el(12, &[(1, 1)]);
        assert!(matches!(x.galois(2), Err(CyclotomicError::NotCoprime { .. })));
        assert_eq!(x.galois(5).unwrap(), el(12, &[(5, 1)]));
    }

    #[test]
    fn basic_traces() {
        assert_eq!(el(12, &[(0, 1)]).trace_to_q(), q(4, 1));
        assert_eq!(el(7, &[(1, 1)]).trace_to_q(), q(-1, 1));
        // zeta_5^{-1} seen inside Q(zeta_35)
        let x = el(5, &[(-1, 1)]).lift(35);
        assert_eq!(x.trace_to_q(), q(-6, 1));
    }

    #[test]
    fn subfield_trace() {
        let x = el(5, &[(1, 1)]).lift(35);
        assert!(x.lies_in(5));
        assert!(!el(35, &[(1, 1)]).lies_in(5));
        assert_eq!(x.trace_from_subfield(5), q(-1, 1));
    }

    #[test]
    fn text_round_trip() {
        let x = el(7, &[(1, 1), (2, 1), (4, 1)]);
        let s = x.to_string();
        assert_eq!(s.parse::<CyclotomicElement>().unwrap(), x);
        assert_eq!(el(5, &[(0, 3)]).to_string(), "3 @ 5");
    }

    #[test]
    fn json_round_trip() {
        let x = CyclotomicElement::make(9, [(2, q(1, 2)), (4, q(-3, 1))]).unwrap();
        let j = serde_json::to_string(&x).unwrap();
        let y: CyclotomicElement = serde_json::from_str(&j).unwrap();
        assert_eq!(x, y);
    }
}
