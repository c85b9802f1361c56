use anyhow::Result;
use pgq_core::selftest::run_all;
use serde_json::json;

use crate::output::{csv_table, line, Report, Status};

pub fn run() -> Result<Report> {
    let checks = run_all();
    let mut out = String::new();
    for c in &checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        line(&mut out, format!("{mark} {}: {}", c.name, c.detail));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    line(&mut out, format!("{} of {} checks passed", checks.len() - failed, checks.len()));
    let status = if failed == 0 { Status::Settled } else { Status::Open };
    let csv = csv_table(
        &["check", "passed", "detail"],
        checks.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]),
    );
    Ok(Report { status, text: out, json: json!(checks), csv })
}
