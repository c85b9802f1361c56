//! Data files bundled into the library. Every loader validates what it
//! returns, and [`validate_all`] checks the whole bundle.

use crate::brauer::{BrauerError, BrauerTreeSpec, GroupArithmeticProfile};
use crate::help::{CharacterTableSlice, HelpError, InequalitySystem};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

/// Character table slices, by file name.
pub const TABLES: &[(&str, &str)] = bundle!["thompson.json", "s5.json", "c3xd10.json"];

/// HeLP inequality systems given as coefficient rows.
pub const INEQUALITIES: &[(&str, &str)] = bundle!["onan.json"];

pub const TREES: &[(&str, &str)] = bundle![
    "trees/s5_p3_principal.json",
    "trees/s5_p3_sign.json",
    "trees/s5_p5_principal.json",
    "trees/c3xd10_p5_1.json",
    "trees/c3xd10_p5_w.json",
    "trees/c3xd10_p5_wb.json",
    "trees/c3xd10_p3_1.json",
    "trees/c3xd10_p3_sgn.json",
    "trees/c3xd10_p3_psi1.json",
    "trees/c3xd10_p3_psi2.json",
];

pub const PROFILES: &[(&str, &str)] = bundle![
    "profiles/m11.json",
    "profiles/m12.json",
    "profiles/m22.json",
    "profiles/m23.json",
    "profiles/m24.json",
    "profiles/j1.json",
    "profiles/j2.json",
    "profiles/hs.json",
    "profiles/mcl.json",
    "profiles/held.json",
    "profiles/onan.json",
    "profiles/thompson.json",
    "profiles/monster.json",
    "profiles/psl4_2.json",
    "profiles/s5.json",
    "profiles/c3xd10.json",
];

/// Looks a bundled file up by its path or by its bare file name.
pub fn lookup(set: &[(&'static str, &'static str)], name: &str) -> Option<&'static str> {
    let base = name.rsplit('/').next().unwrap_or(name);
    set.iter()
        .find(|(k, _)| *k == name || k.rsplit('/').next() == Some(base))
        .map(|(_, v)| *v)
}

fn get(set: &[(&'static str, &'static str)], name: &str) -> &'static str {
    lookup(set, name).unwrap_or_else(|| panic!("no bundled fixture {name}"))
}

pub fn table(name: &str) -> Result<CharacterTableSlice, HelpError> {
    CharacterTableSlice::from_json(get(TABLES, name))
}

pub fn thompson() -> CharacterTableSlice {
    table("thompson.json").expect("bundled fixture is valid")
}

pub fn s5() -> CharacterTableSlice {
    table("s5.json").expect("bundled fixture is valid")
}

pub fn c3xd10() -> CharacterTableSlice {
    table("c3xd10.json").expect("bundled fixture is valid")
}

pub fn onan() -> InequalitySystem {
    InequalitySystem::from_json(get(INEQUALITIES, "onan.json")).expect("bundled fixture is valid")
}

pub fn tree(name: &str) -> Result<BrauerTreeSpec, BrauerError> {
    BrauerTreeSpec::from_json_validated(get(TREES, name))
}

pub fn profile(name: &str) -> Result<GroupArithmeticProfile, BrauerError> {
    GroupArithmeticProfile::from_json(get(PROFILES, name))
}

/// Bundled trees together with the table they belong to.
pub fn trees_with_tables() -> Vec<(BrauerTreeSpec, CharacterTableSlice)> {
    TREES
        .iter()
        .map(|(name, _)| {
            let t = tree(name).expect("bundled fixture is valid");
            let table = match t.group.as_deref() {
                Some("S5") => s5(),
                Some("C3xD10") => c3xd10(),
                other => panic!("tree {name} refers to unknown group {other:?}"),
            };
            (t, table)
        })
        .collect()
}

/// One line per fixture: name and validation result.
pub fn validate_all() -> Vec<(String, Result<(), String>)> {
    let mut out = Vec::new();
    for (name, _) in TABLES {
        out.push((name.to_string(), table(name).map(|_| ()).map_err(|e| e.to_string())));
    }
    for (name, text) in INEQUALITIES {
        out.push((name.to_string(), InequalitySystem::from_json(text).map(|_| ()).map_err(|e| e.to_string())));
    }
    for (name, _) in TREES {
        let r = tree(name).map_err(|e| e.to_string()).and_then(|t| {
            let slice = match t.group.as_deref() {
                Some("S5") => s5(),
                Some("C3xD10") => c3xd10(),
                other => return Err(format!("unknown group {other:?}")),
            };
            for v in &t.vertices {
                for c in v.characters() {
                    slice.character(c).map_err(|e| e.to_string())?;
                }
            }
            Ok(())
        });
        out.push((name.to_string(), r));
    }
    for (name, text) in PROFILES {
        let r = profile(name).map_err(|e| e.to_string()).and_then(|p| {
            let raw: GroupArithmeticProfile = serde_json::from_str(text).map_err(|e| e.to_string())?;
            if raw.spectrum == p.spectrum {
                Ok(())
            } else {
                Err("stored spectrum is not divisor-closed".into())
            }
        });
        out.push((name.to_string(), r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_is_valid() {
        for (name, r) in validate_all() {
            assert!(r.is_ok(), "{name}: {r:?}");
        }
    }

    #[test]
    fn lookup_by_base_name() {
        assert!(lookup(PROFILES, "monster.json").is_some());
        assert!(lookup(PROFILES, "/some/dir/monster.json").is_some());
        assert!(lookup(TABLES, "nothing.json").is_none());
    }
}
