//! HeLP constraints given directly as rows `(constant + Σ c_i ε_i)/den ∈ Z_{≥0}`,
//! for groups whose character table is not bundled.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::forms::LinearForm;
use super::lp::{LinearProgram, LpResult};
use super::search::MAX_SEARCH_POINTS;
use super::HelpError;
use crate::arith::prime_divisors;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityVariable {
    pub name: String,
    /// Element order of the classes summed in this variable.
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityRow {
    pub constant: i64,
    pub coefficients: Vec<i64>,
    pub denominator: i64,
}

impl InequalityRow {
    fn numerator(&self, eps: &[i64]) -> i128 {
        self.coefficients
            .iter()
            .zip(eps)
            .fold(self.constant as i128, |a, (c, e)| a + *c as i128 * *e as i128)
    }

    /// Whether the row value is a non-negative integer.
    pub fn holds(&self, eps: &[i64]) -> bool {
        let num = self.numerator(eps);
        num >= 0 && num % self.denominator as i128 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalitySystem {
    pub group: String,
    pub unit_order: u64,
    pub variables: Vec<InequalityVariable>,
    pub rows: Vec<InequalityRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub group: String,
    pub unit_order: u64,
    pub variables: Vec<String>,
    /// Bounds on all variables but the last, which is `1 − Σ others`.
    pub bounds: Option<Vec<(String, i64, i64)>>,
    /// Feasible points, all variables listed.
    pub feasible: Vec<Vec<i64>>,
}

impl InequalitySystem {
    pub fn from_json(text: &str) -> Result<Self, HelpError> {
        let s: InequalitySystem = serde_json::from_str(text).map_err(HelpError::from_json)?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), HelpError> {
        if self.variables.is_empty() {
            return Err(HelpError::Invalid("no variables".into()));
        }
        for v in &self.variables {
            if v.order < 2 || self.unit_order % v.order != 0 {
                return Err(HelpError::Invalid(format!(
                    "variable {} has order {} not dividing {}",
                    v.name, v.order, self.unit_order
                )));
            }
        }
        for r in &self.rows {
            if r.coefficients.len() != self.variables.len() || r.denominator <= 0 {
                return Err(HelpError::Invalid("row shape does not match the variables".into()));
            }
        }
        Ok(())
    }

    /// All row conditions plus augmentation one and the p-class congruences.
    pub fn satisfied_by(&self, eps: &[i64]) -> bool {
        eps.len() == self.variables.len()
            && eps.iter().sum::<i64>() == 1
            && self.rows.iter().all(|r| r.holds(eps))
            && self.congruences_hold(eps)
    }

    fn congruences_hold(&self, eps: &[i64]) -> bool {
        prime_divisors(self.unit_order)
            .into_iter()
            .filter(|&p| p != self.unit_order)
            .all(|p| {
                let s: i64 = self
                    .variables
                    .iter()
                    .zip(eps)
                    .filter(|(v, _)| v.order == p)
                    .map(|(_, e)| e)
                    .sum();
                s.rem_euclid(p as i64) == 0
            })
    }

    fn forms(&self) -> Vec<LinearForm> {
        self.rows
            .iter()
            .map(|r| {
                let d = r.denominator;
                LinearForm {
                    constant: BigRational::new(r.constant.into(), d.into()),
                    coeffs: r.coefficients.iter().map(|&c| BigRational::new(c.into(), d.into())).collect(),
                }
                .eliminate_last()
            })
            .collect()
    }

    /// Bounds from the real relaxation, then the exact feasible set.
    pub fn solve(&self) -> Result<InequalityReport, HelpError> {
        let k = self.variables.len() - 1;
        let mut lp = LinearProgram::new(k);
        for f in self.forms() {
            lp.add_ge(f.coeffs.clone(), -f.constant.clone());
        }
        let names: Vec<String> = self.variables.iter().map(|v| v.name.clone()).collect();
        let mut report = InequalityReport {
            group: self.group.clone(),
            unit_order: self.unit_order,
            variables: names.clone(),
            bounds: None,
            feasible: Vec::new(),
        };
        let mut bounds = Vec::new();
        for i in 0..k {
            let mut c = vec![BigRational::from_integer(0.into()); k];
            c[i] = BigRational::from_integer(1.into());
            let (lo, hi) = match (lp.minimize(&c), lp.maximize(&c)) {
                (LpResult::Optimal(a), LpResult::Optimal(b)) => (a.ceil().to_integer(), b.floor().to_integer()),
                (LpResult::Infeasible, _) | (_, LpResult::Infeasible) => return Ok(report),
                _ => return Err(HelpError::Unbounded(names[i].clone())),
            };
            let lo: i64 = lo.try_into().map_err(|_| HelpError::Unbounded(names[i].clone()))?;
            let hi: i64 = hi.try_into().map_err(|_| HelpError::Unbounded(names[i].clone()))?;
            bounds.push((names[i].clone(), lo, hi));
        }
        let size: u128 = bounds.iter().map(|(_, lo, hi)| (hi - lo + 1).max(0) as u128).product();
        if size > MAX_SEARCH_POINTS {
            return Err(HelpError::SearchTooLarge(size));
        }
        let mut x: Vec<i64> = bounds.iter().map(|b| b.1).collect();
        if bounds.iter().all(|(_, lo, hi)| lo <= hi) {
            loop {
                let mut full = x.clone();
                full.push(1 - x.iter().sum::<i64>());
                if self.satisfied_by(&full) {
                    report.feasible.push(full);
                }
                let mut i = 0;
                while i < k && x[i] == bounds[i].2 {
                    x[i] = bounds[i].1;
                    i += 1;
                }
                if i == k {
                    break;
                }
                x[i] += 1;
            }
        }
        report.bounds = Some(bounds);
        Ok(report)
    }
}

/// The three rows for units of order 21 in the O'Nan group, in `ε_3`.
pub fn onan_rows() -> [InequalityRow; 3] {
    [
        InequalityRow { constant: 98493, coefficients: vec![312, 0], denominator: 21 },
        InequalityRow { constant: 98415, coefficients: vec![26, 0], denominator: 21 },
        InequalityRow { constant: 98415, coefficients: vec![-156, 0], denominator: 21 },
    ]
}

/// Evaluates the three O'Nan rows at `(ε_3, ε_7)`; the caller enforces
/// `ε_3 + ε_7 = 1`.
pub fn onan_inequalities(epsilon3: i64, epsilon7: i64) -> [bool; 3] {
    let eps = [epsilon3, epsilon7];
    onan_rows().map(|r| r.holds(&eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn onan() -> InequalitySystem {
        InequalitySystem {
            group: "ON".into(),
            unit_order: 21,
            variables: vec![
                InequalityVariable { name: "3a".into(), order: 3 },
                InequalityVariable { name: "7ab".into(), order: 7 },
            ],
            rows: onan_rows().to_vec(),
            provenance: None,
        }
    }

    #[test]
    fn quoted_point() {
        assert_eq!(onan_inequalities(-6, 7), [true, true, true]);
        assert!(!onan_inequalities(0, 1)[0]);
        // 98805 = 21·4705 and 98259 = 21·4679, but 21 does not divide 98441
        assert_eq!(onan_inequalities(1, 0), [true, false, true]);
    }

    #[test]
    fn feasible_set() {
        let r = onan().solve().unwrap();
        assert!(r.feasible.contains(&vec![-6, 7]));
        let b = &r.bounds.as_ref().unwrap()[0];
        assert_eq!((b.1, b.2), (-315, 630));
        for p in &r.feasible {
            assert_eq!(p[0].rem_euclid(21), 15);
        }
    }
}
