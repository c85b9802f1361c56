//! Partial augmentations of a torsion unit and its powers, and the
//! Luthar–Passi eigenvalue multiplicities.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::forms::LinearForm;
use super::table::CharacterTableSlice;
use super::HelpError;
use crate::arith::divisors;
use crate::cyclotomic::CyclotomicElement;

/// Class name → partial augmentation.
pub type Distribution = BTreeMap<String, i64>;

/// Partial augmentations of `u` (key 1) and of every power `u^d` for proper
/// divisors `d` of the unit order (`u^n = 1` is implicit).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialAugmentationVector {
    pub unit_order: u64,
    pub powers: BTreeMap<u64, Distribution>,
}

impl PartialAugmentationVector {
    pub fn entries(&self) -> &Distribution {
        &self.powers[&1]
    }

    /// The vector of a group element `g`: `ε(g^d)` is concentrated on the
    /// class of `g^d`.
    pub fn from_element(slice: &CharacterTableSlice, class: &str) -> Result<Self, HelpError> {
        let n = slice.class(class)?.order;
        let mut powers = BTreeMap::new();
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            let c = slice.power_class(class, d)?;
            powers.insert(d, Distribution::from([(c.name.clone(), 1)]));
        }
        Ok(PartialAugmentationVector { unit_order: n, powers })
    }

    /// The same vector with zero entries dropped, for comparisons.
    pub fn normalized(&self) -> Self {
        let powers = self
            .powers
            .iter()
            .map(|(d, dist)| (*d, dist.iter().filter(|(_, e)| **e != 0).map(|(c, e)| (c.clone(), *e)).collect()))
            .collect();
        PartialAugmentationVector { unit_order: self.unit_order, powers }
    }

    /// Augmentation one, vanishing at the identity and at classes whose
    /// order does not divide the order of the power.
    pub fn validate(&self, slice: &CharacterTableSlice) -> Result<(), HelpError> {
        let n = self.unit_order;
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            let dist = self
                .powers
                .get(&d)
                .ok_or_else(|| HelpError::InvalidVector(format!("no distribution for u^{d}")))?;
            let m = n / d;
            let mut sum = 0;
            for (c, &e) in dist {
                let info = slice.class(c)?;
                if e != 0 && (info.order == 1 || m % info.order != 0) {
                    return Err(HelpError::InvalidVector(format!(
                        "u^{d} has order {m} but nonzero partial augmentation at {c}"
                    )));
                }
                sum += e;
            }
            if sum != 1 {
                return Err(HelpError::InvalidVector(format!("partial augmentations of u^{d} sum to {sum}")));
            }
        }
        Ok(())
    }

    /// `χ(u^d)`.
    pub fn character_value(
        &self,
        slice: &CharacterTableSlice,
        chi: &str,
        d: u64,
    ) -> Result<CyclotomicElement, HelpError> {
        let n = self.unit_order;
        if d % n == 0 {
            return Ok(CyclotomicElement::integer(1, slice.character(chi)?.degree as i64));
        }
        let dist = self.powers.get(&d).ok_or_else(|| HelpError::MissingPowerData(d))?;
        distribution_value(slice, chi, dist, n / d)
    }
}

/// `Σ_g ε_g·χ(g)` in `Q(ζ_m)`.
pub fn distribution_value(
    slice: &CharacterTableSlice,
    chi: &str,
    dist: &Distribution,
    m: u64,
) -> Result<CyclotomicElement, HelpError> {
    let mut acc = CyclotomicElement::zero(m);
    for (c, &e) in dist {
        if e != 0 {
            acc = &acc + &slice.value(chi, c)?.scale(&BigRational::from_integer(e.into()));
        }
    }
    Ok(acc)
}

/// `μ(ζ_n^j, u, χ) = (1/n) Σ_{d|n} Tr_{Q(ζ_n^d)/Q}(χ(u^d)·ζ_n^{−jd})`.
pub fn lupa_multiplicity(
    slice: &CharacterTableSlice,
    chi: &str,
    pa: &PartialAugmentationVector,
    j: i64,
) -> Result<BigRational, HelpError> {
    let n = pa.unit_order;
    let mut total = BigRational::zero();
    for d in divisors(n) {
        let v = pa.character_value(slice, chi, d)?;
        let root = CyclotomicElement::root_of_unity(n, -j * d as i64)?;
        total += (&v * &root).trace_from_subfield(n / d);
    }
    Ok(total / BigRational::from_integer(n.into()))
}

/// The multiplicity `μ(ζ_n^j, u, χ)` as an affine form in the partial
/// augmentations `ε_{vars[i]}(u)`, with the powers `u^d` (`1 < d < n`)
/// fixed by `lower`.
pub fn multiplicity_form(
    slice: &CharacterTableSlice,
    chi: &str,
    n: u64,
    lower: &BTreeMap<u64, Distribution>,
    vars: &[String],
    j: i64,
) -> Result<LinearForm, HelpError> {
    let nq = BigRational::from_integer(n.into());
    let mut form = LinearForm::zero(vars.len());
    for d in divisors(n).into_iter().filter(|&d| d > 1) {
        let v = if d == n {
            CyclotomicElement::integer(1, slice.character(chi)?.degree as i64)
        } else {
            let dist = lower.get(&d).ok_or(HelpError::MissingPowerData(d))?;
            distribution_value(slice, chi, dist, n / d)?
        };
        let root = CyclotomicElement::root_of_unity(n, -j * d as i64)?;
        form.constant += (&v * &root).trace_from_subfield(n / d) / &nq;
    }
    let root = CyclotomicElement::root_of_unity(n, -j)?;
    for (i, c) in vars.iter().enumerate() {
        form.coeffs[i] = (slice.value(chi, c)? * &root).trace_from_subfield(n) / &nq;
    }
    Ok(form)
}

/// Eigenvalue multiplicities of a group element from the character values
/// on all its powers, by the finite Fourier inversion
/// `μ(ζ^j) = (1/n) Σ_{k<n} χ(g^k) ζ^{−jk}`. Independent of traces.
pub fn element_multiplicities_by_fourier(
    slice: &CharacterTableSlice,
    chi: &str,
    class: &str,
) -> Result<Vec<BigRational>, HelpError> {
    let n = slice.class(class)?.order;
    let mut out = Vec::with_capacity(n as usize);
    for j in 0..n as i64 {
        let mut acc = CyclotomicElement::zero(n);
        for k in 0..n {
            let v = slice.value(chi, &slice.power_class(class, k)?.name)?;
            acc = &acc + &(v * &CyclotomicElement::root_of_unity(n, -j * k as i64)?);
        }
        let r = acc.as_rational().ok_or_else(|| {
            HelpError::Invalid(format!("Fourier sum for {chi} at {class} is not rational"))
        })?;
        out.push(r / BigRational::from_integer(n.into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3: &str = r#"{
        "group": "C3", "order": 3,
        "classes": [
            {"name": "1a", "order": 1},
            {"name": "3a", "order": 3, "powers": {"2": "3b", "3": "1a"}},
            {"name": "3b", "order": 3, "powers": {"2": "3a", "3": "1a"}}
        ],
        "characters": [
            {"name": "1", "degree": 1, "values": {"1a": "1", "3a": "1", "3b": "1"}},
            {"name": "w", "degree": 1, "values": {"1a": "1", "3a": "z^1 @ 3", "3b": "z^2 @ 3"}}
        ]
    }"#;

    #[test]
    fn linear_character_eigenvalue() {
        let t = CharacterTableSlice::from_json(C3).unwrap();
        let pa = PartialAugmentationVector::from_element(&t, "3a").unwrap();
        pa.validate(&t).unwrap();
        let mu: Vec<_> = (0..3).map(|j| lupa_multiplicity(&t, "w", &pa, j).unwrap()).collect();
        assert_eq!(mu, vec![BigRational::zero(), BigRational::from_integer(1.into()), BigRational::zero()]);
        assert_eq!(mu, element_multiplicities_by_fourier(&t, "w", "3a").unwrap());
    }

    #[test]
    fn identity_unit() {
        let t = CharacterTableSlice::from_json(C3).unwrap();
        let pa = PartialAugmentationVector { unit_order: 1, powers: BTreeMap::new() };
        assert_eq!(lupa_multiplicity(&t, "w", &pa, 0).unwrap(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn form_matches_direct_evaluation() {
        let t = CharacterTableSlice::from_json(C3).unwrap();
        let vars = vec!["3a".to_string(), "3b".to_string()];
        for (a, b) in [(1i64, 0i64), (0, 1), (2, -1), (-4, 5)] {
            let pa = PartialAugmentationVector {
                unit_order: 3,
                powers: BTreeMap::from([(1, Distribution::from([("3a".into(), a), ("3b".into(), b)]))]),
            };
            for j in 0..3 {
                let f = multiplicity_form(&t, "w", 3, &BTreeMap::new(), &vars, j).unwrap();
                assert_eq!(f.eval(&[a, b]), lupa_multiplicity(&t, "w", &pa, j).unwrap());
            }
        }
    }
}
