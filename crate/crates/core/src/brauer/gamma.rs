//! Bounds on `γ_s(D)` for the simple module `D` on an edge of a Brauer tree,
//! obtained by walking the subtree on one side of `D` away from the edge.
//!
//! With `E` the side containing `χ`, `a = |E|` and
//! `S_E = Σ_{ψ∈E} δ_ψ·μ(ξζ_p, u, ψ)`:
//! `δ_χ = −1` gives `γ_{p−a}(D) ≥ −S_E` and `γ_{p−a+1}(D) ≥ −μ(ξ,u,χ_1) − S_E`,
//! `δ_χ = +1` gives `γ_{a+1}(D) ≤ S_E` and `γ_a(D) ≤ μ(ξ,u,χ_1) + S_E`,
//! where `χ_1` is a positive leaf inside `E`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::inequality::MultiplicityAssignment;
use super::tree::BrauerTreeSpec;
use super::BrauerError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `γ_s(D) ≥ bound`
    Lower,
    /// `γ_s(D) ≤ bound`
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundCase {
    #[serde(rename = "1a")]
    NegativeA,
    #[serde(rename = "1b")]
    NegativeB,
    #[serde(rename = "2a")]
    PositiveA,
    #[serde(rename = "2b")]
    PositiveB,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaBound {
    /// The vertex whose side of the edge produced the bound.
    pub side: String,
    pub case: BoundCase,
    pub s: i64,
    pub bound: i64,
    pub direction: Direction,
}

/// What a subtree rooted at a vertex (away from its parent edge) tells about
/// the parent edge.
struct Node {
    size: i64,
    signed_sum: i64,
    /// Case (a): `(s, bound)`.
    a: (i64, i64),
    /// Case (b), present when `χ_1` lies in the subtree.
    b: Option<(i64, i64)>,
    contains_chi1: bool,
}

struct Walk<'a> {
    tree: &'a BrauerTreeSpec,
    mu: &'a MultiplicityAssignment,
    chi1: Option<&'a str>,
    p: i64,
}

impl Walk<'_> {
    fn node(&self, v: &str, parent: &str) -> Result<Node, BrauerError> {
        let delta = self.tree.sign(v)?;
        let mu = self.mu.shifted(v)?;
        let mut children = Vec::new();
        for w in self.tree.neighbors(v) {
            if w != parent {
                children.push((w, self.node(w, v)?));
            }
        }
        // the child holding χ_1 goes first
        children.sort_by_key(|(w, c)| (!c.contains_chi1, w.to_string()));
        let size = 1 + children.iter().map(|(_, c)| c.size).sum::<i64>();
        let signed_sum = delta * mu + children.iter().map(|(_, c)| c.signed_sum).sum::<i64>();
        let contains_chi1 = self.chi1 == Some(v) || children.iter().any(|(_, c)| c.contains_chi1);
        let n = children.len() as i64;
        let p = self.p;

        if children.is_empty() {
            return Ok(if delta < 0 {
                Node { size, signed_sum, a: (p - 1, mu), b: None, contains_chi1 }
            } else {
                let b = match self.chi1 {
                    Some(c) if c == v => Some((1, self.mu.base(v)? + mu)),
                    _ => None,
                };
                Node { size, signed_sum, a: (2, mu), b, contains_chi1 }
            });
        }

        let side = |detail: String| BrauerError::SideCondition { vertex: v.to_string(), detail };
        if delta < 0 {
            // children carry upper bounds γ_k(E_i) ≤ m_i with Σ_{j≤i} k_j ≤ p + i − 2
            let check = |ks: &[i64]| -> Result<(), BrauerError> {
                let mut acc = 0;
                for (i, k) in ks.iter().enumerate() {
                    acc += k;
                    if acc > p + i as i64 - 1 {
                        return Err(side(format!("k_1 + ... + k_{} = {acc} > p + {} - 2", i + 1, i + 1)));
                    }
                }
                Ok(())
            };
            let ks: Vec<i64> = children.iter().map(|(_, c)| c.a.0).collect();
            let ms: i64 = children.iter().map(|(_, c)| c.a.1).sum();
            check(&ks)?;
            let a = (p - ks.iter().sum::<i64>() + n - 1, mu - ms);
            let b = match children.first() {
                Some((_, c)) if c.contains_chi1 => match c.b {
                    Some((k1, m1)) => {
                        let mut ks2 = ks.clone();
                        ks2[0] = k1;
                        check(&ks2)?;
                        Some((p - ks2.iter().sum::<i64>() + n - 1, mu - (ms - c.a.1 + m1)))
                    }
                    None => None,
                },
                _ => None,
            };
            Ok(Node { size, signed_sum, a, b, contains_chi1 })
        } else {
            // children carry lower bounds γ_k(E_i) ≥ m_i with Σ_{j≤i} k_j ≥ (i − 1)p + 2
            let check = |ks: &[i64]| -> Result<(), BrauerError> {
                let mut acc = 0;
                for (i, k) in ks.iter().enumerate() {
                    acc += k;
                    if acc < i as i64 * p + 2 {
                        return Err(side(format!("k_1 + ... + k_{} = {acc} < {}·p + 2", i + 1, i)));
                    }
                }
                Ok(())
            };
            let ks: Vec<i64> = children.iter().map(|(_, c)| c.a.0).collect();
            let ms: i64 = children.iter().map(|(_, c)| c.a.1).sum();
            check(&ks)?;
            let a = (n * p - ks.iter().sum::<i64>() + 2, mu - ms);
            let b = match children.first() {
                Some((_, c)) if c.contains_chi1 => match c.b {
                    Some((k1, m1)) => {
                        let mut ks2 = ks.clone();
                        ks2[0] = k1;
                        check(&ks2)?;
                        Some((n * p - ks2.iter().sum::<i64>() + 2, mu - (ms - c.a.1 + m1)))
                    }
                    None => None,
                },
                _ => None,
            };
            Ok(Node { size, signed_sum, a, b, contains_chi1 })
        }
    }
}

/// Resolves `χ_1` inside `E`: a given vertex must be a positive leaf of the
/// whole tree lying in `E`; otherwise the first such leaf by name is used.
fn pick_chi1<'a>(
    tree: &'a BrauerTreeSpec,
    component: &BTreeSet<String>,
    chi1: Option<&'a str>,
) -> Result<Option<&'a str>, BrauerError> {
    let ok = |v: &str| {
        component.contains(v)
            && tree.is_leaf(v)
            && tree.vertex(v).map(|x| x.sign > 0 && !x.exceptional).unwrap_or(false)
    };
    match chi1 {
        Some(c) if ok(c) => Ok(Some(c)),
        Some(c) => Err(BrauerError::NotAPositiveLeaf(c.to_string())),
        None => Ok(tree.vertices.iter().map(|v| v.name.as_str()).filter(|v| ok(v)).min()),
    }
}

fn prepare<'a>(
    tree: &'a BrauerTreeSpec,
    chi: &str,
    other: &str,
    chi1: Option<&'a str>,
) -> Result<(BTreeSet<String>, Option<&'a str>), BrauerError> {
    tree.ensure_valid()?;
    let component = tree.component(chi, other)?;
    if let Some(x) = tree.exceptional() {
        if component.contains(&x.name) {
            return Err(BrauerError::ExceptionalInSubtree { side: chi.to_string(), exceptional: x.name.clone() });
        }
    }
    let chi1 = pick_chi1(tree, &component, chi1)?;
    Ok((component, chi1))
}

fn emit(side: &str, delta: i64, a: (i64, i64), b: Option<(i64, i64)>) -> Vec<GammaBound> {
    let (ca, cb, dir) = if delta < 0 {
        (BoundCase::NegativeA, BoundCase::NegativeB, Direction::Lower)
    } else {
        (BoundCase::PositiveA, BoundCase::PositiveB, Direction::Upper)
    };
    let mut out = vec![GammaBound { side: side.to_string(), case: ca, s: a.0, bound: a.1, direction: dir }];
    if let Some((s, bound)) = b {
        out.push(GammaBound { side: side.to_string(), case: cb, s, bound, direction: dir });
    }
    out
}

/// Bounds on `γ_s(D)` for the edge `D = chi–other`, derived by recursion
/// over the subtree on the side of `chi`. The (b) bound is reported only
/// when a positive leaf `χ_1` with a known `μ(ξ, u, χ_1)` lies in that
/// subtree.
pub fn gamma_bounds(
    tree: &BrauerTreeSpec,
    chi: &str,
    other: &str,
    mu: &MultiplicityAssignment,
    chi1: Option<&str>,
) -> Result<Vec<GammaBound>, BrauerError> {
    let (_, chi1) = prepare(tree, chi, other, chi1)?;
    let chi1 = chi1.filter(|c| mu.base.contains_key(*c));
    let walk = Walk { tree, mu, chi1, p: tree.prime as i64 };
    let node = walk.node(chi, other)?;
    Ok(emit(chi, tree.sign(chi)?, node.a, node.b))
}

/// The same bounds from the closed formulas in `a = |E|` and `S_E`.
pub fn gamma_bounds_closed_form(
    tree: &BrauerTreeSpec,
    chi: &str,
    other: &str,
    mu: &MultiplicityAssignment,
    chi1: Option<&str>,
) -> Result<Vec<GammaBound>, BrauerError> {
    let (component, chi1) = prepare(tree, chi, other, chi1)?;
    let chi1 = chi1.filter(|c| mu.base.contains_key(*c));
    let p = tree.prime as i64;
    let a = component.len() as i64;
    let mut s_e = 0;
    for v in &component {
        s_e += tree.sign(v)? * mu.shifted(v)?;
    }
    let delta = tree.sign(chi)?;
    let base = chi1.map(|c| mu.base(c)).transpose()?;
    let (ra, rb) = if delta < 0 {
        ((p - a, -s_e), base.map(|b| (p - a + 1, -b - s_e)))
    } else {
        ((a + 1, s_e), base.map(|b| (a, b + s_e)))
    };
    Ok(emit(chi, delta, ra, rb))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeConsistency {
    pub edge: (String, String),
    pub bounds: Vec<GammaBound>,
    /// Empty when the bounds leave a non-empty range for every `γ_s(D)`.
    pub conflicts: Vec<String>,
}

/// Collects the bounds from both sides of an edge (each side that avoids
/// the exceptional vertex) and checks them against each other, using that
/// `γ_s` is non-negative, non-increasing in `s` and zero beyond `p`.
pub fn edge_consistency(
    tree: &BrauerTreeSpec,
    a: &str,
    b: &str,
    mu: &MultiplicityAssignment,
) -> Result<EdgeConsistency, BrauerError> {
    let mut bounds = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        match gamma_bounds(tree, x, y, mu, None) {
            Ok(v) => bounds.extend(v),
            Err(BrauerError::ExceptionalInSubtree { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let p = tree.prime as i64;
    let mut conflicts = Vec::new();
    for u in bounds.iter().filter(|x| x.direction == Direction::Upper) {
        if u.bound < 0 {
            conflicts.push(format!("γ_{}(D) ≤ {} is negative", u.s, u.bound));
        }
    }
    for l in bounds.iter().filter(|x| x.direction == Direction::Lower) {
        if l.s > p && l.bound > 0 {
            conflicts.push(format!("γ_{}(D) ≥ {} although parts never exceed p = {p}", l.s, l.bound));
        }
        for u in bounds.iter().filter(|x| x.direction == Direction::Upper) {
            if u.s <= l.s && u.bound < l.bound {
                conflicts.push(format!(
                    "γ_{}(D) ≥ {} contradicts γ_{}(D) ≤ {}",
                    l.s, l.bound, u.s, u.bound
                ));
            }
        }
    }
    Ok(EdgeConsistency { edge: (a.to_string(), b.to_string()), bounds, conflicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::tree::{TreeEdge, TreeVertex};
    use std::collections::BTreeMap;

    fn path(p: u64, signs: &[i8]) -> BrauerTreeSpec {
        let vertices = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| TreeVertex { name: format!("v{i}"), sign: s, exceptional: false, t: None, characters: vec![] })
            .collect();
        let edges = (1..signs.len())
            .map(|i| TreeEdge(format!("v{}", i - 1), format!("v{i}"), format!("E{i}")))
            .collect();
        BrauerTreeSpec { name: None, group: None, prime: p, vertices, edges, provenance: None }
    }

    fn mu(p: u64, shifted: &[i64], base: &[i64]) -> MultiplicityAssignment {
        MultiplicityAssignment {
            p,
            m: 1,
            xi: 0,
            zeta: 1,
            shifted: shifted.iter().enumerate().map(|(i, v)| (format!("v{i}"), *v)).collect(),
            base: base.iter().enumerate().map(|(i, v)| (format!("v{i}"), *v)).collect::<BTreeMap<_, _>>(),
        }
    }

    #[test]
    fn leaf_cases() {
        let t = path(5, &[-1, 1]);
        let a = mu(5, &[3, 4], &[0, 2]);
        let b = gamma_bounds(&t, "v0", "v1", &a, None).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].s, b[0].bound, b[0].direction), (4, 3, Direction::Lower));
        let b = gamma_bounds(&t, "v1", "v0", &a, None).unwrap();
        assert_eq!(b.iter().map(|x| (x.s, x.bound)).collect::<Vec<_>>(), vec![(2, 4), (1, 6)]);
        assert!(b.iter().all(|x| x.direction == Direction::Upper));
    }

    #[test]
    fn recursion_matches_closed_form_on_a_path() {
        let t = path(7, &[1, -1, 1, -1, 1]);
        let a = mu(7, &[2, 5, 1, 0, 3], &[1, 0, 0, 0, 4]);
        for i in 0..4 {
            let (x, y) = (format!("v{i}"), format!("v{}", i + 1));
            for (s, o) in [(&x, &y), (&y, &x)] {
                assert_eq!(
                    gamma_bounds(&t, s, o, &a, None).unwrap(),
                    gamma_bounds_closed_form(&t, s, o, &a, None).unwrap()
                );
            }
        }
    }

    #[test]
    fn refuses_exceptional_side() {
        let mut t = path(5, &[1, -1, 1]);
        t.vertices[1].exceptional = true;
        t.vertices[1].t = Some(2);
        let a = mu(5, &[0, 0, 0], &[0, 0, 0]);
        assert!(matches!(
            gamma_bounds(&t, "v1", "v0", &a, None),
            Err(BrauerError::ExceptionalInSubtree { .. })
        ));
        assert!(gamma_bounds(&t, "v0", "v1", &a, None).is_ok());
    }
}
