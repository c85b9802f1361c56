//! Text form of cyclotomic values: `c0 + c1*z^1 - c2*z^3 @ n`.
//!
//! Coefficients are integers or fractions `a/b`; `z` stands for `ζ_n`. The
//! `@ n` suffix may be omitted when no power of `z` occurs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CyclotomicElement, CyclotomicError};

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad integer {num:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad integer {den:?}"))?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(num, den))
}

fn split_terms(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in body.chars().filter(|c| !c.is_whitespace()) {
        let is_sep = (ch == '+' || ch == '-')
            && !cur.is_empty()
            && !matches!(prev, Some('^') | Some('*') | Some('/') | Some('+') | Some('-'));
        if is_sep {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_term(t: &str) -> Result<(i64, BigRational), String> {
    let (sign, rest) = match t.strip_prefix('-') {
        Some(r) => (-BigRational::one(), r),
        None => (BigRational::one(), t.strip_prefix('+').unwrap_or(t)),
    };
    let (coef_part, z_part) = match rest.find('z') {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let coef = match coef_part.strip_suffix('*') {
        Some(c) => parse_rational(c)?,
        None if coef_part.is_empty() => BigRational::one(),
        None if z_part.is_none() => parse_rational(coef_part)?,
        None => return Err(format!("missing '*' in term {t:?}")),
    };
    let exp = match z_part {
        None => 0,
        Some("") => 1,
        Some(e) => e
            .strip_prefix('^')
            .ok_or_else(|| format!("expected '^' after z in {t:?}"))?
            .parse::<i64>()
            .map_err(|_| format!("bad exponent in {t:?}"))?,
    };
    Ok((exp, sign * coef))
}

/// Parses the text form into a canonical element.
pub fn parse_cyclotomic(input: &str) -> Result<CyclotomicElement, CyclotomicError> {
    let err = |reason: String| CyclotomicError::Parse { input: input.to_string(), reason };
    let (body, cond) = match input.rsplit_once('@') {
        Some((b, c)) => {
            let n: u64 = c.trim().parse().map_err(|_| err(format!("bad conductor {c:?}")))?;
            (b, Some(n))
        }
        None => (input, None),
    };
    let parts = split_terms(body);
    if parts.is_empty() {
        return Err(err("empty expression".into()));
    }
    let mut terms = Vec::new();
    for p in &parts {
        terms.push(parse_term(p).map_err(&err)?);
    }
    let n = match cond {
        Some(n) => n,
        None if terms.iter().all(|(e, _)| *e == 0) => 1,
        None => return Err(err("powers of z require an '@ n' conductor".into())),
    };
    CyclotomicElement::make(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::q;

    #[test]
    fn accepts_common_spellings() {
        let a = parse_cyclotomic("-1/2 + z^1 - 3*z^2 @ 5").unwrap();
        let b = CyclotomicElement::make(5, [(0, q(-1, 2)), (1, q(1, 1)), (2, q(-3, 1))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_cyclotomic("248").unwrap(), CyclotomicElement::integer(1, 248));
        assert_eq!(parse_cyclotomic("-2 @ 5").unwrap(), CyclotomicElement::integer(5, -2));
        assert_eq!(
            parse_cyclotomic("z + z^-1 @ 5").unwrap(),
            CyclotomicElement::from_int_terms(5, &[(1, 1), (4, 1)]).unwrap()
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_cyclotomic("z^2").is_err());
        assert!(parse_cyclotomic("1 + x @ 3").is_err());
        assert!(parse_cyclotomic("1/0").is_err());
        assert!(parse_cyclotomic("1 @ 0").is_err());
    }
}
