//! Which prime pairs of a group can be settled by the Sylow-of-prime-order
//! criterion, given only the group order and its spectrum.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::BrauerError;
use crate::arith::{divisors, is_prime_small};
use crate::numtheory::FactoredInteger;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupArithmeticProfile {
    pub name: String,
    #[serde(with = "crate::decimal")]
    pub order: BigUint,
    /// Element orders; closed under divisors on load.
    pub spectrum: BTreeSet<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl GroupArithmeticProfile {
    /// Parses, closes the spectrum under divisors and validates.
    pub fn from_json(text: &str) -> Result<Self, BrauerError> {
        let mut p: GroupArithmeticProfile = serde_json::from_str(text).map_err(BrauerError::from_json)?;
        p.close_spectrum();
        p.validate()?;
        Ok(p)
    }

    pub fn close_spectrum(&mut self) {
        let closed: BTreeSet<u64> = self.spectrum.iter().flat_map(|&n| divisors(n)).collect();
        self.spectrum = closed;
    }

    pub fn is_closed(&self) -> bool {
        self.spectrum.iter().all(|&n| divisors(n).iter().all(|d| self.spectrum.contains(d)))
    }

    /// Element orders divide `|G|`, and the primes in the spectrum are
    /// exactly those dividing `|G|`.
    pub fn validate(&self) -> Result<(), BrauerError> {
        if self.order.is_zero() {
            return Err(BrauerError::InvalidProfile("group order is zero".into()));
        }
        if self.spectrum.contains(&0) {
            return Err(BrauerError::InvalidProfile("0 in spectrum".into()));
        }
        for &n in &self.spectrum {
            if !(&self.order % BigUint::from(n)).is_zero() {
                return Err(BrauerError::InvalidProfile(format!("element order {n} does not divide |G|")));
            }
        }
        let f = self.factored_order()?;
        let from_order: BTreeSet<u64> = f.primes().map(|p| p as u64).collect();
        let from_spectrum: BTreeSet<u64> = self.spectrum.iter().copied().filter(|&n| is_prime_small(n)).collect();
        if from_order != from_spectrum {
            return Err(BrauerError::InvalidProfile(format!(
                "primes of |G| {from_order:?} differ from primes in the spectrum {from_spectrum:?}"
            )));
        }
        Ok(())
    }

    pub fn factored_order(&self) -> Result<FactoredInteger, BrauerError> {
        Ok(FactoredInteger::from_biguint(&self.order)?)
    }

    pub fn primes(&self) -> Result<Vec<u64>, BrauerError> {
        Ok(self.factored_order()?.primes().map(|p| p as u64).collect())
    }

    /// Membership in the divisor closure of the stored spectrum.
    pub fn has_element_of_order(&self, n: u64) -> bool {
        self.spectrum.iter().any(|&m| m % n == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeVerdict {
    EdgeInGroup,
    SettledByTheorem,
    Open,
}

impl std::fmt::Display for EdgeVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeVerdict::EdgeInGroup => "edge-in-group",
            EdgeVerdict::SettledByTheorem => "settled-by-theorem",
            EdgeVerdict::Open => "open",
        })
    }
}

/// `edge-in-group` when `G` has an element of order `pq`; otherwise
/// `settled-by-theorem` when a Sylow `p`- or `q`-subgroup has prime order;
/// otherwise `open`.
pub fn pq_edge_verdict(profile: &GroupArithmeticProfile, p: u64, q: u64) -> Result<EdgeVerdict, BrauerError> {
    for r in [p, q] {
        if !is_prime_small(r) {
            return Err(BrauerError::NotPrime(r));
        }
    }
    if p == q {
        return Err(BrauerError::SamePrime(p));
    }
    let f = profile.factored_order()?;
    for r in [p, q] {
        if f.exponent(r as u128) == 0 {
            return Err(BrauerError::NotDividing { prime: r, order: profile.order.to_string() });
        }
    }
    Ok(if profile.has_element_of_order(p * q) {
        EdgeVerdict::EdgeInGroup
    } else if f.exponent(p as u128) == 1 || f.exponent(q as u128) == 1 {
        EdgeVerdict::SettledByTheorem
    } else {
        EdgeVerdict::Open
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub p: u64,
    pub q: u64,
    pub verdict: EdgeVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictSummary {
    /// Every pair is an edge of the group or settled by the criterion.
    FullySettled,
    /// Some pairs remain open.
    OpenPairs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictTable {
    pub group: String,
    pub primes: Vec<u64>,
    pub pairs: Vec<PairVerdict>,
    pub open: Vec<(u64, u64)>,
    pub summary: VerdictSummary,
}

/// Verdicts for every pair `p < q` of primes dividing `|G|`.
pub fn group_verdict_table(profile: &GroupArithmeticProfile) -> Result<VerdictTable, BrauerError> {
    let primes = profile.primes()?;
    let pairs: Vec<(u64, u64)> = primes
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| primes[i + 1..].iter().map(move |&q| (p, q)))
        .collect();
    let pairs: Vec<PairVerdict> = pairs
        .par_iter()
        .map(|&(p, q)| pq_edge_verdict(profile, p, q).map(|verdict| PairVerdict { p, q, verdict }))
        .collect::<Result<_, _>>()?;
    let open: Vec<(u64, u64)> =
        pairs.iter().filter(|v| v.verdict == EdgeVerdict::Open).map(|v| (v.p, v.q)).collect();
    let summary = if open.is_empty() { VerdictSummary::FullySettled } else { VerdictSummary::OpenPairs };
    Ok(VerdictTable { group: profile.name.clone(), primes, pairs, open, summary })
}
