//! Affine forms in partial augmentations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `constant + Σ coeffs[i]·x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
    pub constant: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl LinearForm {
    pub fn zero(k: usize) -> Self {
        LinearForm { constant: BigRational::zero(), coeffs: vec![BigRational::zero(); k] }
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &[i64]) -> BigRational {
        let mut v = self.constant.clone();
        for (c, &xi) in self.coeffs.iter().zip(x) {
            v += c * BigRational::from_integer(xi.into());
        }
        v
    }

    /// Substitutes `x_last = 1 − Σ_{i<last} x_i`, dropping the last variable.
    pub fn eliminate_last(&self) -> LinearForm {
        let mut coeffs = self.coeffs.clone();
        let Some(last) = coeffs.pop() else { return self.clone() };
        for c in coeffs.iter_mut() {
            *c -= &last;
        }
        LinearForm { constant: &self.constant + &last, coeffs }
    }

    /// Clears denominators: `(num_const + Σ num_i x_i) / den` with `den > 0`.
    pub fn to_integer(&self) -> Option<IntForm> {
        let den = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |c: &BigRational| (c * BigRational::from_integer(den.clone())).to_integer().to_i128();
        Some(IntForm {
            constant: scale(&self.constant)?,
            coeffs: self.coeffs.iter().map(scale).collect::<Option<Vec<_>>>()?,
            den: den.to_i128()?,
        })
    }

    /// Pretty form with named variables, e.g. `(330 - 120*e[5a])/35`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        FormDisplay { form: self, names }
    }
}

struct FormDisplay<'a> {
    form: &'a LinearForm,
    names: &'a [String],
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(int) = self.form.to_integer() else {
            return write!(f, "{:?}", self.form);
        };
        let mut s = int.constant.to_string();
        for (c, name) in int.coeffs.iter().zip(self.names) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { '-' } else { '+' };
            s.push_str(&format!(" {sign} {}*e[{name}]", c.abs()));
        }
        if int.den == 1 {
            write!(f, "{s}")
        } else {
            write!(f, "({s})/{}", int.den)
        }
    }
}

/// A linear form with integer numerators over a common positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntForm {
    pub constant: i128,
    pub coeffs: Vec<i128>,
    pub den: i128,
}

impl IntForm {
    pub fn numerator(&self, x: &[i64]) -> i128 {
        self.coeffs.iter().zip(x).fold(self.constant, |acc, (c, &xi)| acc + c * xi as i128)
    }

    /// The value if it is an integer.
    pub fn integer_value(&self, x: &[i64]) -> Option<i128> {
        let num = self.numerator(x);
        (num % self.den == 0).then_some(num / self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::q;

    #[test]
    fn elimination_and_display() {
        // (240 - 48 a + 72 b)/35 with b = 1 - a → (312 - 120 a)/35
        let f = LinearForm { constant: q(240, 35), coeffs: vec![q(-48, 35), q(72, 35)] };
        let g = f.eliminate_last();
        assert_eq!(g.eval(&[-6]), q(312 + 720, 35));
        let names = vec!["5a".to_string()];
        assert_eq!(g.display_with(&names).to_string(), "(312 - 120*e[5a])/35");
        let i = g.to_integer().unwrap();
        assert_eq!(i.integer_value(&[-6]), None);
        assert_eq!(i.numerator(&[1]), 192);
    }
}
