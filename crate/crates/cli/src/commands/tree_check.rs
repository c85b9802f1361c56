use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use pgq_core::brauer::{
    edge_consistency, main_inequality_for_unit, main_inequality_holds, validate_tree, BrauerError, BrauerTreeSpec,
    MainInequality, MultiplicityAssignment, TreeEdge,
};
use pgq_core::fixtures::{TABLES, TREES};
use pgq_core::help::{CharacterTableSlice, PartialAugmentationVector};
use serde_json::json;

use crate::input;
use crate::output::{csv_table, line, Report, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Brauer tree (JSON); bundled trees are found by name.
    #[arg(long)]
    pub tree: PathBuf,
    /// Character table whose group elements are tested against the tree.
    #[arg(long, conflicts_with = "assignment")]
    pub table: Option<PathBuf>,
    /// Only this class of the table.
    #[arg(long, requires = "table")]
    pub class: Option<String>,
    /// Multiplicities of a hypothetical unit (JSON).
    #[arg(long)]
    pub assignment: Option<PathBuf>,
    /// Leaf used as χ_1 with --assignment; default: every leaf with a base value.
    #[arg(long, requires = "assignment")]
    pub chi1: Option<String>,
}

struct Row {
    class: String,
    r: MainInequality,
}

pub fn run(args: &Args) -> Result<Report> {
    let text = input::read(&args.tree, &[TREES])?;
    let tree = BrauerTreeSpec::from_json(&text)?;
    let diags = validate_tree(&tree);
    if !diags.is_empty() {
        let mut out = String::new();
        line(&mut out, format!("INVALID: {} problems", diags.len()));
        for d in &diags {
            line(&mut out, format!("  {d}"));
        }
        return Ok(Report {
            status: Status::Invalid,
            text: out,
            json: json!({ "valid": false, "diagnostics": diags }),
            csv: csv_table(&["diagnostic"], diags.iter().map(|d| vec![d.to_string()])),
        });
    }
    let mut out = String::new();
    line(&mut out, format!("VALID: {tree}"));
    let mut rows = Vec::new();
    let mut conflicts = Vec::new();
    if let Some(path) = &args.assignment {
        let a: MultiplicityAssignment = serde_json::from_str(
            &std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        )
        .map_err(BrauerError::from_json)?;
        if a.p != tree.prime {
            bail!("assignment is for p = {}, the tree for p = {}", a.p, tree.prime);
        }
        let leaves: Vec<String> = match &args.chi1 {
            Some(c) => vec![c.clone()],
            None => a.base.keys().filter(|v| tree.is_leaf(v)).cloned().collect(),
        };
        if leaves.is_empty() {
            bail!("the assignment has no base value on a leaf; pass --chi1");
        }
        for chi1 in leaves {
            rows.push(Row { class: "assignment".into(), r: main_inequality_holds(&tree, &a, &chi1)? });
        }
        conflicts.extend(edge_conflicts(&tree, &a)?);
    } else if let Some(path) = &args.table {
        let slice = CharacterTableSlice::from_json(&input::read(path, &[TABLES])?)?;
        let p = tree.prime;
        if slice.order % (p * p) == 0 {
            line(&mut out, format!("warning: {p}^2 divides |G| = {}, the block need not have defect one", slice.order));
        }
        let classes: Vec<String> = match &args.class {
            Some(c) => vec![slice.class(c)?.name.clone()],
            None => slice
                .classes
                .iter()
                .filter(|c| c.order % p == 0 && (c.order / p) % p != 0)
                .map(|c| c.name.clone())
                .collect(),
        };
        for class in classes {
            let pa = PartialAugmentationVector::from_element(&slice, &class)?;
            for r in main_inequality_for_unit(&tree, &slice, &pa)? {
                rows.push(Row { class: class.clone(), r });
            }
            let m = pa.unit_order / p;
            for xi in 0..m {
                for zeta in 1..p {
                    let a = MultiplicityAssignment::from_unit(&tree, &slice, &pa, xi, zeta)?;
                    conflicts.extend(edge_conflicts(&tree, &a)?.into_iter().map(|c| format!("{class}: {c}")));
                }
            }
        }
    }
    let failed = rows.iter().filter(|r| !r.r.holds).count();
    for row in &rows {
        let r = &row.r;
        let mark = if r.holds { "holds" } else { "FAILS" };
        let flip = if r.flipped { " (signs flipped)" } else { "" };
        line(
            &mut out,
            format!("  {} chi1={} xi={} zeta={}: slack {} {mark}{flip}", row.class, r.chi1, r.xi, r.zeta, r.slack),
        );
    }
    for c in &conflicts {
        line(&mut out, format!("  gamma conflict {c}"));
    }
    let status = if failed == 0 && conflicts.is_empty() { Status::Settled } else { Status::Open };
    if !rows.is_empty() {
        line(&mut out, format!("{} of {} inequalities hold, {} gamma conflicts", rows.len() - failed, rows.len(), conflicts.len()));
    }
    let json_rows: Vec<_> = rows.iter().map(|r| json!({ "class": r.class, "result": r.r })).collect();
    let csv = csv_table(
        &["class", "chi1", "xi", "zeta", "slack", "holds", "flipped"],
        rows.iter().map(|row| {
            let r = &row.r;
            vec![
                row.class.clone(),
                r.chi1.clone(),
                r.xi.to_string(),
                r.zeta.to_string(),
                r.slack.to_string(),
                r.holds.to_string(),
                r.flipped.to_string(),
            ]
        }),
    );
    Ok(Report {
        status,
        text: out,
        json: json!({ "valid": true, "tree": tree, "inequalities": json_rows, "gamma_conflicts": conflicts }),
        csv,
    })
}

fn edge_conflicts(tree: &BrauerTreeSpec, a: &MultiplicityAssignment) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for TreeEdge(x, y, label) in &tree.edges {
        match edge_consistency(tree, x, y, a) {
            Ok(ec) => out.extend(ec.conflicts.into_iter().map(|c| format!("{label} ({x}-{y}) xi={}: {c}", a.xi))),
            Err(BrauerError::MissingValue(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}
