use anyhow::Result;
use pgq_core::numtheory::{constant_c_float, count_n, count_n_by_sieve, li, tail_bound, Census, Condition};
use serde_json::json;

use crate::output::{csv_table, line, Report, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Count primes up to this bound.
    #[arg(long)]
    pub bound: u64,
    /// thm51: no square q² with q > 3 divides (p²+1)(p⁶−1);
    /// cor13: (p²+1)(p²−p+1)(p²+p+1) is squarefree.
    #[arg(long, default_value = "thm51")]
    pub condition: Condition,
    /// Recount with the square sieve and compare prime by prime.
    #[arg(long)]
    pub verify: bool,
}

/// `N(x)` read off a census log for a smaller bound.
fn count_upto(c: &Census, x: u64) -> u64 {
    c.log.iter().filter(|s| s.p <= x && s.passes()).count() as u64
}

pub fn run(args: &Args) -> Result<Report> {
    let census = count_n(args.bound, args.condition)?;
    let verified = if args.verify {
        Some(count_n_by_sieve(args.bound, args.condition)?.log == census.log)
    } else {
        None
    };
    let x = args.bound as f64;
    let li_x = if args.bound >= 3 { Some(li(x)?) } else { None };
    let truncation = args.bound.max(5);
    let c_trunc = constant_c_float(truncation);
    let ratio = census.count as f64 / census.total_primes as f64;

    let mut trend = Vec::new();
    let mut t = 1000u64;
    while t <= args.bound {
        let n = count_upto(&census, t);
        let l = li(t as f64)?;
        trend.push(json!({ "x": t, "count": n, "li_x": l, "count_over_li": n as f64 / l }));
        t = t.saturating_mul(10);
    }

    let mut out = String::new();
    line(
        &mut out,
        format!(
            "{} of {} primes p <= {} satisfy {}",
            census.count, census.total_primes, args.bound, args.condition
        ),
    );
    line(&mut out, format!("ratio {ratio:.6}"));
    if let Some(l) = li_x {
        line(&mut out, format!("Li({}) = {l:.4}, N/Li = {:.6}", args.bound, census.count as f64 / l));
    }
    line(&mut out, format!("c truncated at {truncation} = {c_trunc:.6} (tail factor within {:.2e})", tail_bound(truncation)));
    for r in &trend {
        line(
            &mut out,
            format!(
                "  x = {}: N = {}, Li = {:.4}, N/Li = {:.6}",
                r["x"], r["count"], r["li_x"].as_f64().unwrap_or(0.0), r["count_over_li"].as_f64().unwrap_or(0.0)
            ),
        );
    }
    let status = match verified {
        Some(true) => {
            line(&mut out, "verified: square sieve agrees on every prime");
            Status::Settled
        }
        Some(false) => {
            line(&mut out, "MISMATCH: square sieve disagrees with factoring");
            Status::Open
        }
        None => Status::Settled,
    };
    let json = json!({
        "bound": args.bound,
        "condition": args.condition,
        "count": census.count,
        "total_primes": census.total_primes,
        "ratio": ratio,
        "li_x": li_x,
        "count_over_li": li_x.map(|l| census.count as f64 / l),
        "c_truncated": c_trunc,
        "c_truncation": truncation,
        "c_tail_bound": tail_bound(truncation),
        "verified": verified,
        "trend": trend,
    });
    let csv = csv_table(
        &["p", "status", "witness_q", "witness_square"],
        census.log.iter().map(|s| {
            let (status, q, sq) = match s.witness {
                None => ("pass", String::new(), String::new()),
                Some(q) => ("fail", q.to_string(), (q as u128 * q as u128).to_string()),
            };
            vec![s.p.to_string(), status.to_string(), q, sq]
        }),
    );
    Ok(Report { status, text: out, json, csv })
}
