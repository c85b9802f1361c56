//! The eigenvalue inequality for a torsion unit of order `p·m` against a
//! block of defect one:
//! `0 ≤ μ(ξ, u, χ_1) + δ_{e+1}·μ(ξζ_p, u, χ_{e+1}) + t·Σ_{i≤e} δ_i·μ(ξζ_p, u, χ_i)`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::tree::BrauerTreeSpec;
use super::BrauerError;
use crate::arith::gcd;
use crate::help::{lupa_multiplicity, CharacterTableSlice, PartialAugmentationVector};

/// Multiplicities of the eigenvalues `ξ` and `ξ·ζ_p` of `u` on every vertex
/// of a tree. With `n = p·m`, `ξ = ζ_n^{p·xi}` and `ζ_p = ζ_n^{m·zeta}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityAssignment {
    pub p: u64,
    pub m: u64,
    pub xi: u64,
    pub zeta: u64,
    /// Vertex → `μ(ξ·ζ_p, u, χ_v)`; the exceptional vertex carries the sum
    /// over its characters.
    pub shifted: BTreeMap<String, i64>,
    /// Vertex → `μ(ξ, u, χ_v)`; only the leaf character is required.
    #[serde(default)]
    pub base: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainInequality {
    pub chi1: String,
    pub xi: u64,
    pub zeta: u64,
    pub holds: bool,
    pub slack: i64,
    /// True when the signs were negated so that `χ_1` is positive.
    pub flipped: bool,
}

fn as_multiplicity(vertex: &str, r: BigRational) -> Result<i64, BrauerError> {
    let bad = || BrauerError::NotMultiplicity { vertex: vertex.to_string(), value: r.to_string() };
    if !r.is_integer() || r.is_negative() {
        return Err(bad());
    }
    r.to_integer().to_i64().ok_or_else(bad)
}

impl MultiplicityAssignment {
    /// Exponent of `ξ` and of `ξ·ζ_p` as powers of `ζ_{pm}`.
    pub fn exponents(&self) -> (i64, i64) {
        let n = (self.p * self.m) as i64;
        let base = (self.p * self.xi) as i64 % n;
        (base, (base + (self.m * self.zeta) as i64) % n)
    }

    /// Multiplicities computed from partial augmentations through the
    /// Luthar–Passi formula. Fails if any of them is not a non-negative
    /// integer, which means the vector does not come from a unit.
    pub fn from_unit(
        tree: &BrauerTreeSpec,
        slice: &CharacterTableSlice,
        pa: &PartialAugmentationVector,
        xi: u64,
        zeta: u64,
    ) -> Result<Self, BrauerError> {
        let p = tree.prime;
        let n = pa.unit_order;
        if n % p != 0 || (n / p) % p == 0 {
            return Err(BrauerError::BadUnitOrder { n, p });
        }
        let m = n / p;
        if gcd(zeta % p, p) != 1 {
            return Err(BrauerError::BadUnitOrder { n, p });
        }
        let mut a = MultiplicityAssignment {
            p,
            m,
            xi: xi % m,
            zeta: zeta % p,
            shifted: BTreeMap::new(),
            base: BTreeMap::new(),
        };
        let (jb, js) = a.exponents();
        for v in &tree.vertices {
            let (mut sb, mut ss) = (BigRational::from_integer(0.into()), BigRational::from_integer(0.into()));
            for c in v.characters() {
                sb += lupa_multiplicity(slice, c, pa, jb)?;
                ss += lupa_multiplicity(slice, c, pa, js)?;
            }
            a.base.insert(v.name.clone(), as_multiplicity(&v.name, sb)?);
            a.shifted.insert(v.name.clone(), as_multiplicity(&v.name, ss)?);
        }
        Ok(a)
    }

    pub fn from_element(
        tree: &BrauerTreeSpec,
        slice: &CharacterTableSlice,
        class: &str,
        xi: u64,
        zeta: u64,
    ) -> Result<Self, BrauerError> {
        let pa = PartialAugmentationVector::from_element(slice, class)?;
        Self::from_unit(tree, slice, &pa, xi, zeta)
    }

    pub fn shifted(&self, vertex: &str) -> Result<i64, BrauerError> {
        self.shifted.get(vertex).copied().ok_or_else(|| BrauerError::MissingValue(vertex.to_string()))
    }

    pub fn base(&self, vertex: &str) -> Result<i64, BrauerError> {
        self.base.get(vertex).copied().ok_or_else(|| BrauerError::MissingValue(vertex.to_string()))
    }
}

/// Evaluates the right-hand side exactly. If `χ_1` carries the sign `−1`
/// the whole sign map is negated first, which is the normalisation the
/// inequality is stated in.
pub fn main_inequality_holds(
    tree: &BrauerTreeSpec,
    a: &MultiplicityAssignment,
    chi1: &str,
) -> Result<MainInequality, BrauerError> {
    tree.ensure_valid()?;
    let leaf = tree.vertex(chi1)?;
    if leaf.exceptional {
        return Err(BrauerError::ExceptionalLeaf(chi1.to_string()));
    }
    if !tree.is_leaf(chi1) {
        return Err(BrauerError::NotALeaf(chi1.to_string()));
    }
    let flip: i64 = if leaf.sign < 0 { -1 } else { 1 };
    let t = tree.t();
    let mut slack = a.base(chi1)?;
    for v in &tree.vertices {
        let term = flip * v.sign as i64 * a.shifted(&v.name)?;
        slack += if v.exceptional { term } else { t * term };
    }
    Ok(MainInequality {
        chi1: chi1.to_string(),
        xi: a.xi,
        zeta: a.zeta,
        holds: slack >= 0,
        slack,
        flipped: flip < 0,
    })
}

/// The inequality for every `ξ` (all `m`-th roots of unity), every
/// primitive `ζ_p` and every non-exceptional leaf as `χ_1`.
pub fn main_inequality_for_unit(
    tree: &BrauerTreeSpec,
    slice: &CharacterTableSlice,
    pa: &PartialAugmentationVector,
) -> Result<Vec<MainInequality>, BrauerError> {
    tree.ensure_valid()?;
    let p = tree.prime;
    let n = pa.unit_order;
    if n % p != 0 || (n / p) % p == 0 {
        return Err(BrauerError::BadUnitOrder { n, p });
    }
    let m = n / p;
    let leaves: Vec<&str> = tree
        .vertices
        .iter()
        .filter(|v| !v.exceptional && tree.is_leaf(&v.name))
        .map(|v| v.name.as_str())
        .collect();
    let mut out = Vec::new();
    for xi in 0..m {
        for zeta in 1..p {
            let a = MultiplicityAssignment::from_unit(tree, slice, pa, xi, zeta)?;
            for &chi1 in &leaves {
                out.push(main_inequality_holds(tree, &a, chi1)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::tree::{TreeEdge, TreeVertex};

    fn star() -> BrauerTreeSpec {
        let v = |n: &str, s: i8, e: bool| TreeVertex {
            name: n.into(),
            sign: s,
            exceptional: e,
            t: e.then_some(2),
            characters: vec![],
        };
        BrauerTreeSpec {
            name: None,
            group: None,
            prime: 5,
            vertices: vec![v("a", 1, false), v("x", -1, true), v("b", 1, false)],
            edges: vec![
                TreeEdge("a".into(), "x".into(), "S1".into()),
                TreeEdge("x".into(), "b".into(), "S2".into()),
            ],
            provenance: None,
        }
    }

    fn assignment(shifted: &[(&str, i64)], base: &[(&str, i64)]) -> MultiplicityAssignment {
        MultiplicityAssignment {
            p: 5,
            m: 3,
            xi: 0,
            zeta: 1,
            shifted: shifted.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            base: base.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    #[test]
    fn trivial_slack() {
        let a = assignment(&[("a", 0), ("x", 0), ("b", 0)], &[("a", 1)]);
        let r = main_inequality_holds(&star(), &a, "a").unwrap();
        assert!(r.holds);
        assert_eq!(r.slack, 1);
    }

    #[test]
    fn exceptional_term_is_not_scaled() {
        // 0 + (−1)·3 + 2·(1 + 0) = −1
        let a = assignment(&[("a", 1), ("x", 3), ("b", 0)], &[("a", 0)]);
        let r = main_inequality_holds(&star(), &a, "a").unwrap();
        assert_eq!(r.slack, -1);
        assert!(!r.holds);
    }

    #[test]
    fn refuses_bad_leaf() {
        let a = assignment(&[("a", 0), ("x", 0), ("b", 0)], &[("a", 1), ("x", 0)]);
        assert!(matches!(main_inequality_holds(&star(), &a, "x"), Err(BrauerError::ExceptionalLeaf(_))));
        let mut t = star();
        t.vertices[1].exceptional = false;
        t.vertices[1].t = None;
        assert!(matches!(main_inequality_holds(&t, &a, "x"), Err(BrauerError::NotALeaf(_))));
    }

    #[test]
    fn negative_leaf_flips_signs() {
        let mut t = star();
        for v in &mut t.vertices {
            v.sign = -v.sign;
        }
        let a = assignment(&[("a", 1), ("x", 3), ("b", 0)], &[("a", 0)]);
        let r = main_inequality_holds(&t, &a, "a").unwrap();
        assert!(r.flipped);
        assert_eq!(r.slack, -1);
    }
}
