use std::path::PathBuf;

use anyhow::{bail, Result};
use pgq_core::brauer::{group_verdict_table, pq_edge_verdict, EdgeVerdict, GroupArithmeticProfile, VerdictSummary};
use pgq_core::fixtures::PROFILES;
use serde_json::json;

use crate::input;
use crate::output::{csv_table, line, Report, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Group profile (JSON); bundled profiles are found by name.
    #[arg(long)]
    pub profile: PathBuf,
    /// Check a single pair; requires --q.
    #[arg(long, requires = "q")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub q: Option<u64>,
}

pub fn run(args: &Args) -> Result<Report> {
    let text = input::read(&args.profile, &[PROFILES])?;
    let profile = GroupArithmeticProfile::from_json(&text)?;
    if let (Some(p), Some(q)) = (args.p, args.q) {
        return single(&profile, p, q);
    }
    let table = group_verdict_table(&profile)?;
    let mut out = String::new();
    let primes: Vec<String> = table.primes.iter().map(u64::to_string).collect();
    line(&mut out, format!("group {} of order {}, primes {}", table.group, profile.order, primes.join(", ")));
    for v in &table.pairs {
        line(&mut out, format!("  {}·{}: {}", v.p, v.q, v.verdict));
    }
    let status = match table.summary {
        VerdictSummary::FullySettled => {
            line(&mut out, "fully settled: no open pairs");
            Status::Settled
        }
        VerdictSummary::OpenPairs => {
            let open: Vec<String> = table.open.iter().map(|(p, q)| format!("{p}·{q}")).collect();
            line(&mut out, format!("open pairs: {}", open.join(", ")));
            Status::Open
        }
    };
    let csv = csv_table(
        &["p", "q", "verdict"],
        table.pairs.iter().map(|v| vec![v.p.to_string(), v.q.to_string(), v.verdict.to_string()]),
    );
    Ok(Report { status, text: out, json: serde_json::to_value(&table)?, csv })
}

fn single(profile: &GroupArithmeticProfile, p: u64, q: u64) -> Result<Report> {
    if p == q {
        bail!("p and q must differ");
    }
    let (p, q) = (p.min(q), p.max(q));
    let v = pq_edge_verdict(profile, p, q)?;
    let status = if v == EdgeVerdict::Open { Status::Open } else { Status::Settled };
    Ok(Report {
        status,
        text: format!("{} {p}·{q}: {v}\n", profile.name),
        json: json!({ "group": profile.name, "p": p, "q": q, "verdict": v }),
        csv: csv_table(&["p", "q", "verdict"], [vec![p.to_string(), q.to_string(), v.to_string()]]),
    })
}
