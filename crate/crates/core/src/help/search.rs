//! HeLP feasibility: integer partial augmentations compatible with the
//! multiplicity conditions and the p-class congruences.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::forms::{IntForm, LinearForm};
use super::lp::{LinearProgram, LpResult};
use super::pa::{multiplicity_form, Distribution, PartialAugmentationVector};
use super::table::CharacterTableSlice;
use super::HelpError;
use crate::arith::prime_divisors;

/// Largest integer box the enumeration will walk.
pub const MAX_SEARCH_POINTS: u128 = 20_000_000;

/// `Σ_{c ∈ classes} ε_c(u) ≡ residue (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub classes: Vec<String>,
    pub residue: u64,
    pub modulus: u64,
}

/// For every prime `p | n` with `n ≠ p`: the order-`p` classes sum to 0 and
/// the remaining classes sum to 1 modulo `p`.
pub fn congruence_constraints(slice: &CharacterTableSlice, n: u64) -> Vec<Congruence> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    for p in prime_divisors(n) {
        if p == n {
            continue;
        }
        let (order_p, others): (Vec<_>, Vec<_>) = slice
            .classes_dividing(n)
            .into_iter()
            .partition(|c| c.order == p);
        out.push(Congruence {
            classes: order_p.into_iter().map(|c| c.name.clone()).collect(),
            residue: 0,
            modulus: p,
        });
        out.push(Congruence {
            classes: others.into_iter().map(|c| c.name.clone()).collect(),
            residue: 1,
            modulus: p,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum HelpOutcome {
    /// No vector survives: no normalized unit of this order.
    Infeasible,
    /// The method cannot exclude these vectors.
    Feasible { vectors: Vec<PartialAugmentationVector> },
    Inconclusive { reason: String },
}

/// Bounds found for one choice of the lower powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub lower: BTreeMap<u64, Distribution>,
    /// Free variables and their integer bounds (`None` when the branch's
    /// real relaxation is already empty).
    pub bounds: Option<Vec<(String, i64, i64)>>,
    pub feasible: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HelpReport {
    pub group: String,
    pub unit_order: u64,
    pub characters: Vec<String>,
    /// All class variables; the last one is eliminated by augmentation one.
    pub variables: Vec<String>,
    pub congruences: Vec<Congruence>,
    pub branches: Vec<BranchReport>,
    pub outcome: HelpOutcome,
}

struct Solver<'a> {
    slice: &'a CharacterTableSlice,
    characters: Vec<String>,
    memo: BTreeMap<u64, HelpReport>,
}

/// Runs the HeLP method for units of order `n` with the given characters
/// (all characters of the slice when `characters` is empty). Powers `u^d`
/// range over the feasible vectors of order `n/d`, found recursively.
pub fn feasible_partial_augmentations(
    slice: &CharacterTableSlice,
    n: u64,
    characters: &[String],
) -> Result<HelpReport, HelpError> {
    if n < 2 {
        return Err(HelpError::InvalidVector("unit order must be at least 2".into()));
    }
    let characters: Vec<String> = if characters.is_empty() {
        slice.characters.iter().map(|c| c.name.clone()).collect()
    } else {
        for c in characters {
            slice.character(c)?;
        }
        characters.to_vec()
    };
    let mut solver = Solver { slice, characters, memo: BTreeMap::new() };
    solver.solve(n)
}

impl Solver<'_> {
    fn solve(&mut self, n: u64) -> Result<HelpReport, HelpError> {
        if let Some(r) = self.memo.get(&n) {
            return Ok(r.clone());
        }
        let report = self.solve_uncached(n)?;
        self.memo.insert(n, report.clone());
        Ok(report)
    }

    fn report(&self, n: u64, variables: Vec<String>, outcome: HelpOutcome) -> HelpReport {
        HelpReport {
            group: self.slice.group.clone(),
            unit_order: n,
            characters: self.characters.clone(),
            variables,
            congruences: congruence_constraints(self.slice, n),
            branches: Vec::new(),
            outcome,
        }
    }

    /// Every consistent choice of distributions for `u^d`, `1 < d < n`.
    fn lower_choices(&mut self, n: u64) -> Result<Result<Vec<BTreeMap<u64, Distribution>>, HelpOutcome>, HelpError> {
        let primes = prime_divisors(n);
        let mut per_prime = Vec::new();
        for &p in &primes {
            if p == n {
                continue;
            }
            let sub = self.solve(n / p)?;
            match sub.outcome {
                HelpOutcome::Feasible { vectors } => per_prime.push((p, vectors)),
                HelpOutcome::Infeasible => return Ok(Err(HelpOutcome::Infeasible)),
                HelpOutcome::Inconclusive { reason } => {
                    return Ok(Err(HelpOutcome::Inconclusive {
                        reason: format!("order {} (power u^{p}): {reason}", n / p),
                    }))
                }
            }
        }
        let mut combos: Vec<BTreeMap<u64, Distribution>> = vec![BTreeMap::new()];
        for (p, vectors) in per_prime {
            let mut next = Vec::new();
            for base in &combos {
                'vec: for v in &vectors {
                    let mut merged = base.clone();
                    for (&e, dist) in &v.powers {
                        match merged.get(&(p * e)) {
                            Some(existing) if existing != dist => continue 'vec,
                            _ => {
                                merged.insert(p * e, dist.clone());
                            }
                        }
                    }
                    next.push(merged);
                }
            }
            next.sort();
            next.dedup();
            combos = next;
        }
        Ok(Ok(combos))
    }

    fn solve_uncached(&mut self, n: u64) -> Result<HelpReport, HelpError> {
        let vars: Vec<String> = self.slice.classes_dividing(n).iter().map(|c| c.name.clone()).collect();
        if vars.is_empty() {
            return Ok(self.report(n, vars, HelpOutcome::Infeasible));
        }
        let lowers = match self.lower_choices(n)? {
            Ok(l) => l,
            Err(outcome) => return Ok(self.report(n, vars, outcome)),
        };
        let congruences = congruence_constraints(self.slice, n);
        let mut branches = Vec::new();
        let mut vectors = Vec::new();
        for lower in lowers {
            match self.branch(n, &vars, &lower, &congruences)? {
                Ok((bounds, found)) => {
                    branches.push(BranchReport { lower: lower.clone(), bounds, feasible: found.len() });
                    vectors.extend(found);
                }
                Err(reason) => {
                    let mut r = self.report(n, vars, HelpOutcome::Inconclusive { reason });
                    r.branches = branches;
                    return Ok(r);
                }
            }
        }
        vectors.sort();
        let outcome = if vectors.is_empty() {
            HelpOutcome::Infeasible
        } else {
            HelpOutcome::Feasible { vectors }
        };
        let mut r = self.report(n, vars, outcome);
        r.branches = branches;
        Ok(r)
    }

    #[allow(clippy::type_complexity)]
    fn branch(
        &self,
        n: u64,
        vars: &[String],
        lower: &BTreeMap<u64, Distribution>,
        congruences: &[Congruence],
    ) -> Result<Result<(Option<Vec<(String, i64, i64)>>, Vec<PartialAugmentationVector>), String>, HelpError> {
        let k = vars.len() - 1;
        let mut constraints: Vec<(LinearForm, u64)> = Vec::new();
        for chi in &self.characters {
            let degree = self.slice.character(chi)?.degree;
            for j in 0..n as i64 {
                let f = multiplicity_form(self.slice, chi, n, lower, vars, j)?.eliminate_last();
                constraints.push((f, degree));
            }
        }
        let mut lp = LinearProgram::new(k);
        for (f, deg) in &constraints {
            lp.add_ge(f.coeffs.clone(), -f.constant.clone());
            lp.add_le(f.coeffs.clone(), BigRational::from_integer((*deg).into()) - &f.constant);
        }
        let mut bounds = Vec::with_capacity(k);
        for i in 0..k {
            let mut c = vec![BigRational::zero(); k];
            c[i] = BigRational::from_integer(1.into());
            let lo = match lp.minimize(&c) {
                LpResult::Optimal(v) => v.ceil().to_integer(),
                LpResult::Infeasible => return Ok(Ok((None, Vec::new()))),
                LpResult::Unbounded => return Ok(Err(format!("partial augmentation at {} is unbounded below", vars[i]))),
            };
            let hi = match lp.maximize(&c) {
                LpResult::Optimal(v) => v.floor().to_integer(),
                LpResult::Infeasible => return Ok(Ok((None, Vec::new()))),
                LpResult::Unbounded => return Ok(Err(format!("partial augmentation at {} is unbounded above", vars[i]))),
            };
            let (Some(lo), Some(hi)) = (lo.to_i64(), hi.to_i64()) else {
                return Ok(Err(format!("bounds for {} exceed 64 bits", vars[i])));
            };
            bounds.push((vars[i].clone(), lo, hi));
        }
        let size: u128 = bounds.iter().map(|(_, lo, hi)| (hi - lo + 1).max(0) as u128).product();
        if size > MAX_SEARCH_POINTS {
            return Ok(Err(format!("search box has {size} points, above the limit {MAX_SEARCH_POINTS}")));
        }
        let int_forms: Vec<(IntForm, i128)> = constraints
            .iter()
            .map(|(f, d)| (f.to_integer().expect("denominators fit in i128"), *d as i128))
            .collect();
        let cong_forms: Vec<(Vec<i64>, i64, i64, i64)> = congruences
            .iter()
            .map(|c| {
                // Σ_{selected} x_i with x_last = 1 − Σ x_i: coefficients and constant
                let mut coeffs = vec![0i64; k];
                let mut constant = 0i64;
                for name in &c.classes {
                    let idx = vars.iter().position(|v| v == name).expect("class variable");
                    if idx == k {
                        constant += 1;
                        coeffs.iter_mut().for_each(|x| *x -= 1);
                    } else {
                        coeffs[idx] += 1;
                    }
                }
                (coeffs, constant, c.residue as i64, c.modulus as i64)
            })
            .collect();
        let check = |x: &[i64]| -> bool {
            int_forms.iter().all(|(f, deg)| match f.integer_value(x) {
                Some(v) => v >= 0 && v <= *deg,
                None => false,
            }) && cong_forms.iter().all(|(co, c0, r, m)| {
                let s = co.iter().zip(x).fold(*c0, |a, (c, xi)| a + c * xi);
                s.rem_euclid(*m) == *r
            })
        };
        let first_range: Vec<i64> = match bounds.first() {
            Some((_, lo, hi)) => (*lo..=*hi).collect(),
            None => vec![0],
        };
        let found: Vec<Vec<i64>> = first_range
            .par_iter()
            .flat_map_iter(|&x0| {
                let mut hits = Vec::new();
                let mut x: Vec<i64> = bounds.iter().map(|b| b.1).collect();
                if k > 0 {
                    x[0] = x0;
                }
                loop {
                    if check(&x) {
                        hits.push(x.clone());
                    }
                    // odometer over coordinates 1..k
                    let mut i = 1;
                    loop {
                        if i >= k {
                            return hits.into_iter();
                        }
                        if x[i] < bounds[i].2 {
                            x[i] += 1;
                            break;
                        }
                        x[i] = bounds[i].1;
                        i += 1;
                    }
                }
            })
            .collect();
        let vectors = found
            .into_iter()
            .map(|x| {
                let mut dist: Distribution = vars[..k].iter().cloned().zip(x.iter().copied()).collect();
                dist.insert(vars[k].clone(), 1 - x.iter().sum::<i64>());
                let mut powers = lower.clone();
                powers.insert(1, dist);
                PartialAugmentationVector { unit_order: n, powers }
            })
            .collect();
        Ok(Ok((Some(bounds), vectors)))
    }
}
