use std::path::Path;

use anyhow::{bail, Context, Result};
use pgq_core::fixtures;

/// Bundled files searched when a path does not exist.
pub type Bundle = &'static [(&'static str, &'static str)];

/// Reads `path`, falling back to a bundled fixture with the same file name.
pub fn read(path: &Path, bundles: &[Bundle]) -> Result<String> {
    if path.exists() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    let name = path.to_string_lossy();
    for b in bundles {
        if let Some(text) = fixtures::lookup(b, &name) {
            return Ok(text.to_string());
        }
    }
    bail!("{name}: no such file and no bundled fixture of that name")
}
