use std::path::PathBuf;

use anyhow::{bail, Result};
use pgq_core::fixtures::{INEQUALITIES, TABLES};
use pgq_core::help::{
    feasible_partial_augmentations, CharacterTableSlice, HelpError, HelpOutcome, HelpReport, InequalitySystem,
    PartialAugmentationVector,
};
use serde_json::{json, Value};

use crate::input;
use crate::output::{csv_table, line, Report, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Character table slice or HeLP inequality system (JSON); bundled
    /// files are found by name.
    #[arg(long)]
    pub table: PathBuf,
    /// Order of the torsion unit; optional for inequality systems.
    #[arg(long)]
    pub order: Option<u64>,
    /// Restrict to these characters (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub characters: Vec<String>,
}

pub fn run(args: &Args) -> Result<Report> {
    let text = input::read(&args.table, &[TABLES, INEQUALITIES])?;
    let value: Value = serde_json::from_str(&text).map_err(HelpError::from_json)?;
    if value.get("rows").is_some() {
        let sys = InequalitySystem::from_json(&text)?;
        if let Some(n) = args.order {
            if n != sys.unit_order {
                bail!("the inequality system is for units of order {}, not {n}", sys.unit_order);
            }
        }
        if !args.characters.is_empty() {
            bail!("--characters does not apply to an inequality system");
        }
        return inequality_report(&sys);
    }
    let slice = CharacterTableSlice::from_json(&text)?;
    let Some(n) = args.order else { bail!("--order is required for a character table") };
    let report = feasible_partial_augmentations(&slice, n, &args.characters)?;
    Ok(table_report(&report))
}

fn vector_line(v: &PartialAugmentationVector) -> String {
    v.powers
        .iter()
        .map(|(d, dist)| {
            let body: Vec<String> = dist.iter().map(|(c, e)| format!("{c}: {e}")).collect();
            let who = if *d == 1 { "u".to_string() } else { format!("u^{d}") };
            format!("{who} {{{}}}", body.join(", "))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn table_report(r: &HelpReport) -> Report {
    let mut text = String::new();
    let n = r.unit_order;
    let status = match &r.outcome {
        HelpOutcome::Infeasible => {
            line(&mut text, format!("INFEASIBLE: no normalized unit of order {n}"));
            Status::Settled
        }
        HelpOutcome::Feasible { vectors } => {
            line(&mut text, format!("FEASIBLE: feasible point exists for order {n} ({} vectors)", vectors.len()));
            Status::Open
        }
        HelpOutcome::Inconclusive { reason } => {
            line(&mut text, format!("INCONCLUSIVE: {reason}"));
            Status::Open
        }
    };
    line(&mut text, format!("group {}, characters {}", r.group, r.characters.join(", ")));
    for c in &r.congruences {
        line(&mut text, format!("congruence: sum of e[{}] = {} mod {}", c.classes.join("], e["), c.residue, c.modulus));
    }
    for b in &r.branches {
        let lower: Vec<String> = b
            .lower
            .iter()
            .map(|(d, dist)| {
                let body: Vec<String> = dist.iter().filter(|(_, e)| **e != 0).map(|(c, e)| format!("{c}: {e}")).collect();
                format!("u^{d} {{{}}}", body.join(", "))
            })
            .collect();
        let bounds = match &b.bounds {
            None => "relaxation empty".to_string(),
            Some(bs) => bs.iter().map(|(v, lo, hi)| format!("{lo} <= e[{v}] <= {hi}")).collect::<Vec<_>>().join(", "),
        };
        let head = if lower.is_empty() { String::new() } else { format!("{}: ", lower.join("; ")) };
        line(&mut text, format!("branch {head}{bounds}; {} feasible", b.feasible));
    }
    let mut rows = Vec::new();
    if let HelpOutcome::Feasible { vectors } = &r.outcome {
        for (i, v) in vectors.iter().enumerate() {
            line(&mut text, format!("  {}", vector_line(v)));
            for (d, dist) in &v.powers {
                for (c, e) in dist {
                    rows.push(vec![i.to_string(), d.to_string(), c.clone(), e.to_string()]);
                }
            }
        }
    }
    Report {
        status,
        text,
        json: serde_json::to_value(r).expect("report serializes"),
        csv: csv_table(&["vector", "power", "class", "partial_augmentation"], rows),
    }
}

fn inequality_report(sys: &InequalitySystem) -> Result<Report> {
    let r = sys.solve()?;
    let mut text = String::new();
    let n = r.unit_order;
    let status = if r.feasible.is_empty() {
        line(&mut text, format!("INFEASIBLE: no normalized unit of order {n}"));
        Status::Settled
    } else {
        line(&mut text, format!("FEASIBLE: feasible point exists for order {n} ({} points)", r.feasible.len()));
        Status::Open
    };
    line(&mut text, format!("group {}, {} rows", r.group, sys.rows.len()));
    if let Some(bs) = &r.bounds {
        let s: Vec<String> = bs.iter().map(|(v, lo, hi)| format!("{lo} <= e[{v}] <= {hi}")).collect();
        line(&mut text, format!("bounds: {}", s.join(", ")));
    }
    let names = r.variables.iter().map(|v| format!("e[{v}]")).collect::<Vec<_>>().join(", ");
    for p in &r.feasible {
        let vals: Vec<String> = p.iter().map(i64::to_string).collect();
        line(&mut text, format!("  ({names}) = ({})", vals.join(", ")));
    }
    let header: Vec<&str> = r.variables.iter().map(String::as_str).collect();
    let csv = csv_table(&header, r.feasible.iter().map(|p| p.iter().map(i64::to_string).collect()));
    let json = json!({
        "group": r.group,
        "unit_order": n,
        "variables": r.variables,
        "bounds": r.bounds,
        "feasible": r.feasible,
        "status": if r.feasible.is_empty() { "infeasible" } else { "feasible" },
    });
    Ok(Report { status, text, json, csv })
}
