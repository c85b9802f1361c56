use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::BrauerError;
use crate::arith::is_prime_small;
use crate::cyclotomic::CyclotomicElement;
use crate::help::CharacterTableSlice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeVertex {
    pub name: String,
    /// `+1` or `−1`.
    pub sign: i8,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exceptional: bool,
    /// Number of exceptional characters; only meaningful on the
    /// exceptional vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Characters of a table carried by the vertex. Defaults to the vertex
    /// name; the exceptional vertex lists its `t` characters.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<String>,
}

impl TreeVertex {
    pub fn characters(&self) -> Vec<&str> {
        if self.characters.is_empty() {
            vec![self.name.as_str()]
        } else {
            self.characters.iter().map(String::as_str).collect()
        }
    }
}

/// An unordered edge with its simple-module label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge(pub String, pub String, pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTreeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub prime: u64,
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Error)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TreeDiagnostic {
    #[error("{p} is not a prime")]
    NotPrime { p: u64 },
    #[error("the tree has no vertices")]
    Empty,
    #[error("vertex {vertex:?} occurs twice")]
    DuplicateVertex { vertex: String },
    #[error("vertex {vertex:?} has sign {sign}, expected +1 or -1")]
    BadSign { vertex: String, sign: i8 },
    #[error("edge {label:?} uses unknown vertex {vertex:?}")]
    UnknownEndpoint { label: String, vertex: String },
    #[error("edge {label:?} is a loop at {vertex:?}")]
    SelfLoop { label: String, vertex: String },
    #[error("vertices {a:?} and {b:?} are joined more than once")]
    ParallelEdge { a: String, b: String },
    #[error("edge label {label:?} occurs twice")]
    DuplicateLabel { label: String },
    #[error("edge {a:?}-{b:?} closes a cycle")]
    Cycle { a: String, b: String },
    #[error("the tree is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("neighbouring vertices {a:?} and {b:?} carry the same sign")]
    EqualSigns { a: String, b: String },
    #[error("{edges} edges exceed the bound p - 1 = {bound}")]
    TooManyEdges { edges: usize, bound: u64 },
    #[error("{vertices} vertices exceed the bound p = {bound}")]
    TooManyVertices { vertices: usize, bound: u64 },
    #[error("more than one exceptional vertex: {}", vertices.join(", "))]
    MultipleExceptional { vertices: Vec<String> },
    #[error("multiplicity t given on the non-exceptional vertex {vertex:?}")]
    MultiplicityOnOrdinary { vertex: String },
    #[error("exceptional vertex {vertex:?} has multiplicity {t}, expected at least 1")]
    BadMultiplicity { vertex: String, t: u32 },
    #[error("exceptional vertex {vertex:?} has t = {t} but lists {count} characters")]
    CharacterCount { vertex: String, t: u32, count: usize },
    #[error("non-exceptional vertex {vertex:?} lists {count} characters, expected one")]
    OrdinaryCharacterCount { vertex: String, count: usize },
    #[error("character {character:?} is attached to more than one vertex")]
    DuplicateCharacter { character: String },
}

impl BrauerTreeSpec {
    /// Parses a tree. Structural problems are reported by [`validate_tree`],
    /// not here.
    pub fn from_json(text: &str) -> Result<Self, BrauerError> {
        serde_json::from_str(text).map_err(BrauerError::from_json)
    }

    /// Parses and insists on a valid tree.
    pub fn from_json_validated(text: &str) -> Result<Self, BrauerError> {
        let t = Self::from_json(text)?;
        t.ensure_valid()?;
        Ok(t)
    }

    pub fn ensure_valid(&self) -> Result<(), BrauerError> {
        let d = validate_tree(self);
        if d.is_empty() {
            Ok(())
        } else {
            Err(BrauerError::InvalidTree(d))
        }
    }

    pub fn vertex(&self, name: &str) -> Result<&TreeVertex, BrauerError> {
        self.vertices
            .iter()
            .find(|v| v.name == name)
            .ok_or_else(|| BrauerError::UnknownVertex(name.to_string()))
    }

    pub fn sign(&self, name: &str) -> Result<i64, BrauerError> {
        Ok(self.vertex(name)?.sign as i64)
    }

    pub fn exceptional(&self) -> Option<&TreeVertex> {
        self.vertices.iter().find(|v| v.exceptional)
    }

    /// The exceptional multiplicity, 1 without an exceptional vertex.
    pub fn t(&self) -> i64 {
        self.exceptional()
            .map(|v| v.t.unwrap_or(v.characters.len().max(1) as u32) as i64)
            .unwrap_or(1)
    }

    /// Neighbours in name order.
    pub fn neighbors(&self, name: &str) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .edges
            .iter()
            .filter_map(|TreeEdge(a, b, _)| {
                if a == name {
                    Some(b.as_str())
                } else if b == name {
                    Some(a.as_str())
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// A leaf has exactly one neighbour; a single-vertex tree counts too.
    pub fn is_leaf(&self, name: &str) -> bool {
        let d = self.neighbors(name).len();
        d == 1 || (d == 0 && self.vertices.len() == 1)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.neighbors(a).contains(&b)
    }

    /// Vertices on the side of `side` once the edge `side`–`other` is
    /// removed.
    pub fn component(&self, side: &str, other: &str) -> Result<BTreeSet<String>, BrauerError> {
        if !self.has_edge(side, other) {
            return Err(BrauerError::NotAnEdge(side.to_string(), other.to_string()));
        }
        let mut seen = BTreeSet::from([side.to_string()]);
        let mut stack = vec![side.to_string()];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(&v) {
                if (v == side && w == other) || seen.contains(w) {
                    continue;
                }
                seen.insert(w.to_string());
                stack.push(w.to_string());
            }
        }
        Ok(seen)
    }
}

/// Every violated invariant; an empty list means the tree is valid.
pub fn validate_tree(t: &BrauerTreeSpec) -> Vec<TreeDiagnostic> {
    let mut out = Vec::new();
    if !is_prime_small(t.prime) {
        out.push(TreeDiagnostic::NotPrime { p: t.prime });
    }
    if t.vertices.is_empty() {
        out.push(TreeDiagnostic::Empty);
        return out;
    }
    let mut names = BTreeSet::new();
    let mut characters = BTreeSet::new();
    for v in &t.vertices {
        if !names.insert(v.name.as_str()) {
            out.push(TreeDiagnostic::DuplicateVertex { vertex: v.name.clone() });
        }
        if v.sign != 1 && v.sign != -1 {
            out.push(TreeDiagnostic::BadSign { vertex: v.name.clone(), sign: v.sign });
        }
        if v.exceptional {
            let t_val = v.t.unwrap_or(v.characters.len().max(1) as u32);
            if t_val == 0 {
                out.push(TreeDiagnostic::BadMultiplicity { vertex: v.name.clone(), t: t_val });
            } else if !v.characters.is_empty() && v.characters.len() != t_val as usize {
                out.push(TreeDiagnostic::CharacterCount {
                    vertex: v.name.clone(),
                    t: t_val,
                    count: v.characters.len(),
                });
            }
        } else {
            if v.t.is_some_and(|x| x != 1) {
                out.push(TreeDiagnostic::MultiplicityOnOrdinary { vertex: v.name.clone() });
            }
            if v.characters.len() > 1 {
                out.push(TreeDiagnostic::OrdinaryCharacterCount {
                    vertex: v.name.clone(),
                    count: v.characters.len(),
                });
            }
        }
        for c in v.characters() {
            if !characters.insert(c.to_string()) {
                out.push(TreeDiagnostic::DuplicateCharacter { character: c.to_string() });
            }
        }
    }
    let exceptional: Vec<String> = t.vertices.iter().filter(|v| v.exceptional).map(|v| v.name.clone()).collect();
    if exceptional.len() > 1 {
        out.push(TreeDiagnostic::MultipleExceptional { vertices: exceptional });
    }

    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut labels = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for TreeEdge(a, b, label) in &t.edges {
        if !labels.insert(label.as_str()) {
            out.push(TreeDiagnostic::DuplicateLabel { label: label.clone() });
        }
        let mut known = true;
        for x in [a, b] {
            if !index.contains_key(x.as_str()) {
                out.push(TreeDiagnostic::UnknownEndpoint { label: label.clone(), vertex: x.clone() });
                known = false;
            }
        }
        if !known {
            continue;
        }
        if a == b {
            out.push(TreeDiagnostic::SelfLoop { label: label.clone(), vertex: a.clone() });
            continue;
        }
        let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if !pairs.insert(key.clone()) {
            out.push(TreeDiagnostic::ParallelEdge { a: key.0, b: key.1 });
            continue;
        }
        let (ra, rb) = (find(&mut parent, index[a.as_str()]), find(&mut parent, index[b.as_str()]));
        if ra == rb {
            out.push(TreeDiagnostic::Cycle { a: a.clone(), b: b.clone() });
        } else {
            parent[ra] = rb;
        }
        let sign_of = |n: &str| t.vertices.iter().find(|v| v.name == n).map(|v| v.sign);
        if sign_of(a) == sign_of(b) {
            out.push(TreeDiagnostic::EqualSigns { a: a.clone(), b: b.clone() });
        }
    }
    let roots: BTreeSet<usize> = (0..index.len()).map(|i| find(&mut parent, i)).collect();
    if roots.len() > 1 {
        out.push(TreeDiagnostic::Disconnected { components: roots.len() });
    }
    if t.prime >= 1 && t.edges.len() as u64 > t.prime.saturating_sub(1) {
        out.push(TreeDiagnostic::TooManyEdges { edges: t.edges.len(), bound: t.prime.saturating_sub(1) });
    }
    if t.vertices.len() as u64 > t.prime {
        out.push(TreeDiagnostic::TooManyVertices { vertices: t.vertices.len(), bound: t.prime });
    }
    out
}

/// `δ_{v_x}·value(v_x) + t·Σ_{v ≠ v_x} δ_v·value(v)`; the plain signed sum
/// when there is no exceptional vertex.
pub fn signed_vertex_sum(
    t: &BrauerTreeSpec,
    values: &BTreeMap<String, CyclotomicElement>,
) -> Result<CyclotomicElement, BrauerError> {
    let mult = CyclotomicElement::integer(1, t.t());
    let mut acc = CyclotomicElement::zero(1);
    for v in &t.vertices {
        let x = values.get(&v.name).ok_or_else(|| BrauerError::MissingValue(v.name.clone()))?;
        let signed = if v.sign < 0 { -x } else { x.clone() };
        let term = if v.exceptional { signed } else { &signed * &mult };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `ν(a) = δ_{e+1}χ_{e+1}(a) + t·Σ δ_i χ_i(a)`: the same sum under the name
/// used by the verdict checks.
pub fn nu_functional(
    t: &BrauerTreeSpec,
    char_values: &BTreeMap<String, CyclotomicElement>,
) -> Result<CyclotomicElement, BrauerError> {
    signed_vertex_sum(t, char_values)
}

/// Vertex values at a class of a table; the exceptional vertex gets the
/// sum of its characters.
pub fn vertex_values(
    t: &BrauerTreeSpec,
    slice: &CharacterTableSlice,
    class: &str,
) -> Result<BTreeMap<String, CyclotomicElement>, BrauerError> {
    let mut out = BTreeMap::new();
    for v in &t.vertices {
        let mut acc = CyclotomicElement::zero(1);
        for c in v.characters() {
            acc = &acc + slice.value(c, class)?;
        }
        out.insert(v.name.clone(), acc);
    }
    Ok(out)
}

impl fmt::Display for BrauerTreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name.as_deref().unwrap_or("tree");
        write!(f, "{name} (p = {}): ", self.prime)?;
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                let s = if v.sign > 0 { "+" } else { "-" };
                if v.exceptional {
                    format!("{}{s}[t={}]", v.name, self.t())
                } else {
                    format!("{}{s}", v.name)
                }
            })
            .collect();
        write!(f, "{}", vs.join(" "))?;
        for TreeEdge(a, b, l) in &self.edges {
            write!(f, "; {a}-{b}:{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(p: u64, signs: &[i8]) -> BrauerTreeSpec {
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

    #[test]
    fn small_paths() {
        assert!(validate_tree(&path(5, &[1, -1, 1])).is_empty());
        assert!(matches!(validate_tree(&path(5, &[1, 1, -1]))[..], [TreeDiagnostic::EqualSigns { .. }]));
        let d = validate_tree(&path(3, &[1, -1, 1, -1]));
        assert!(d.contains(&TreeDiagnostic::TooManyEdges { edges: 3, bound: 2 }));
    }

    #[test]
    fn structural_faults() {
        let mut t = path(7, &[1, -1, 1]);
        t.edges.push(TreeEdge("v0".into(), "v2".into(), "E9".into()));
        let d = validate_tree(&t);
        assert!(d.iter().any(|x| matches!(x, TreeDiagnostic::Cycle { .. })));
        let mut t = path(7, &[1, -1, 1]);
        t.edges.pop();
        assert!(validate_tree(&t).contains(&TreeDiagnostic::Disconnected { components: 2 }));
        let mut t = path(7, &[1, -1]);
        t.vertices[0].exceptional = true;
        t.vertices[1].exceptional = true;
        assert!(validate_tree(&t).iter().any(|x| matches!(x, TreeDiagnostic::MultipleExceptional { .. })));
        assert!(validate_tree(&path(4, &[1])).contains(&TreeDiagnostic::NotPrime { p: 4 }));
    }

    #[test]
    fn sums() {
        let t = path(5, &[1, -1, 1]);
        let zero: BTreeMap<String, CyclotomicElement> =
            ["v0", "v1", "v2"].iter().map(|v| (v.to_string(), CyclotomicElement::zero(1))).collect();
        assert!(signed_vertex_sum(&t, &zero).unwrap().is_zero());
        let single = path(5, &[-1]);
        let vals = BTreeMap::from([("v0".to_string(), CyclotomicElement::integer(1, 7))]);
        assert_eq!(nu_functional(&single, &vals).unwrap(), CyclotomicElement::integer(1, -7));
        assert!(matches!(signed_vertex_sum(&t, &vals), Err(BrauerError::MissingValue(_))));
    }

    #[test]
    fn components() {
        let t = path(7, &[1, -1, 1, -1]);
        let c = t.component("v1", "v2").unwrap();
        assert_eq!(c, BTreeSet::from(["v0".to_string(), "v1".to_string()]));
        assert!(t.component("v0", "v2").is_err());
    }
}
