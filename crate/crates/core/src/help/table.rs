//! Character table slices: the classes of interest with their power maps
//! and some ordinary characters evaluated on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::HelpError;
use crate::arith::{gcd, is_prime_small, lcm};
use crate::cyclotomic::CyclotomicElement;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjugacyClassInfo {
    pub name: String,
    pub order: u64,
    /// Class size; optional, only needed for orthogonality checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<u64>,
    /// Prime `r` (as a decimal key) → class of `g^r`.
    #[serde(default)]
    pub powers: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Character {
    pub name: String,
    pub degree: u64,
    #[serde(with = "crate::cyclotomic::as_text_map")]
    pub values: BTreeMap<String, CyclotomicElement>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableSlice {
    pub group: String,
    #[serde(with = "crate::decimal")]
    pub order: u64,
    pub classes: Vec<ConjugacyClassInfo>,
    pub characters: Vec<Character>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl CharacterTableSlice {
    /// Parses and validates a slice from JSON.
    pub fn from_json(text: &str) -> Result<Self, HelpError> {
        let slice: CharacterTableSlice = serde_json::from_str(text).map_err(HelpError::from_json)?;
        slice.validate()?;
        Ok(slice)
    }

    pub fn validate(&self) -> Result<(), HelpError> {
        let mut seen = BTreeMap::new();
        for c in &self.classes {
            if seen.insert(c.name.as_str(), c).is_some() {
                return Err(HelpError::Invalid(format!("duplicate class {}", c.name)));
            }
            if c.order == 0 || self.order % c.order != 0 {
                return Err(HelpError::Invalid(format!(
                    "class {} has order {} not dividing |G| = {}",
                    c.name, c.order, self.order
                )));
            }
        }
        let ids: Vec<_> = self.classes.iter().filter(|c| c.order == 1).collect();
        if ids.len() != 1 {
            return Err(HelpError::Invalid("exactly one class of order 1 is required".into()));
        }
        for c in &self.classes {
            for (r, target) in &c.powers {
                let r: u64 = r
                    .parse()
                    .ok()
                    .filter(|&r| is_prime_small(r))
                    .ok_or_else(|| HelpError::Invalid(format!("power map key {r:?} of {} is not a prime", c.name)))?;
                let t = seen
                    .get(target.as_str())
                    .ok_or_else(|| HelpError::UnknownClass(target.clone()))?;
                if t.order != c.order / gcd(c.order, r) {
                    return Err(HelpError::Invalid(format!(
                        "{}^{r} = {target} has order {}, expected {}",
                        c.name,
                        t.order,
                        c.order / gcd(c.order, r)
                    )));
                }
            }
        }
        let id = &ids[0].name;
        let mut names = BTreeMap::new();
        for chi in &self.characters {
            if names.insert(chi.name.as_str(), ()).is_some() {
                return Err(HelpError::Invalid(format!("duplicate character {}", chi.name)));
            }
            for c in &self.classes {
                let v = chi.values.get(&c.name).ok_or_else(|| HelpError::MissingValue {
                    character: chi.name.clone(),
                    class: c.name.clone(),
                })?;
                if !v.lies_in(c.order) {
                    return Err(HelpError::Invalid(format!(
                        "{}({}) = {v} does not lie in Q(ζ_{})",
                        chi.name, c.name, c.order
                    )));
                }
            }
            for k in chi.values.keys() {
                if !seen.contains_key(k.as_str()) {
                    return Err(HelpError::UnknownClass(k.clone()));
                }
            }
            let at_one = &chi.values[id];
            if *at_one != CyclotomicElement::integer(1, chi.degree as i64) {
                return Err(HelpError::Invalid(format!(
                    "{}(1) = {at_one} differs from its degree {}",
                    chi.name, chi.degree
                )));
            }
        }
        Ok(())
    }

    pub fn class(&self, name: &str) -> Result<&ConjugacyClassInfo, HelpError> {
        self.classes
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| HelpError::UnknownClass(name.to_string()))
    }

    pub fn identity(&self) -> &ConjugacyClassInfo {
        self.classes.iter().find(|c| c.order == 1).expect("validated slice has an identity")
    }

    pub fn character(&self, name: &str) -> Result<&Character, HelpError> {
        self.characters
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| HelpError::UnknownCharacter(name.to_string()))
    }

    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |a, c| lcm(a, c.order))
    }

    /// The class of `g^d` for `g` in class `name`.
    pub fn power_class(&self, name: &str, d: u64) -> Result<&ConjugacyClassInfo, HelpError> {
        let mut cur = self.class(name)?;
        if d % cur.order == 0 {
            return Ok(self.identity());
        }
        for (r, e) in crate::arith::factor_small(d) {
            for _ in 0..e {
                if cur.order == 1 {
                    return Ok(cur);
                }
                let next = cur.powers.get(&r.to_string()).ok_or_else(|| HelpError::MissingPower {
                    class: cur.name.clone(),
                    prime: r,
                })?;
                cur = self.class(next)?;
            }
        }
        Ok(cur)
    }

    /// Classes whose element order divides `n`, excluding the identity.
    pub fn classes_dividing(&self, n: u64) -> Vec<&ConjugacyClassInfo> {
        self.classes.iter().filter(|c| c.order > 1 && n % c.order == 0).collect()
    }

    /// `χ(g)` for `g` in class `class`.
    pub fn value(&self, character: &str, class: &str) -> Result<&CyclotomicElement, HelpError> {
        let chi = self.character(character)?;
        chi.values.get(class).ok_or_else(|| HelpError::MissingValue {
            character: character.to_string(),
            class: class.to_string(),
        })
    }
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
    fn parses_and_powers() {
        let t = CharacterTableSlice::from_json(C3).unwrap();
        assert_eq!(t.power_class("3a", 2).unwrap().name, "3b");
        assert_eq!(t.power_class("3a", 4).unwrap().name, "3a");
        assert_eq!(t.power_class("3a", 6).unwrap().name, "1a");
        assert_eq!(t.exponent(), 3);
        assert_eq!(t.classes_dividing(6).len(), 2);
    }

    #[test]
    fn rejects_bad_tables() {
        let bad_degree = C3.replace(r#""degree": 1, "values": {"1a": "1", "3a": "z"#, r#""degree": 2, "values": {"1a": "1", "3a": "z"#);
        assert!(CharacterTableSlice::from_json(&bad_degree).is_err());
        let bad_power = C3.replace(r#""2": "3b", "3": "1a""#, r#""2": "1a", "3": "1a""#);
        assert!(CharacterTableSlice::from_json(&bad_power).is_err());
        let bad_field = C3.replace(r#""3a": "z^1 @ 3""#, r#""3a": "z^1 @ 4""#);
        assert!(CharacterTableSlice::from_json(&bad_field).is_err());
        match CharacterTableSlice::from_json("{\n  \"group\": }") {
            Err(HelpError::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }
}
