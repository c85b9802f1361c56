use anyhow::Result;
use pgq_core::numtheory::{lie_order, lie_series_verdict, LieFamily, LieSeriesSpec, LieVerdictKind};
use serde_json::json;

use crate::output::{csv_table, line, Report, Status};

#[derive(clap::Args)]
pub struct Args {
    /// One of PSL4, PSU4, PSp4, PSp6, POmega7, POmega8plus, G2.
    #[arg(long)]
    pub family: LieFamily,
    /// Field size, a prime power.
    #[arg(long)]
    pub q: u64,
}

pub fn run(args: &Args) -> Result<Report> {
    let spec = LieSeriesSpec::new(args.family, args.q)?;
    let v = lie_series_verdict(&spec)?;
    let order = lie_order(&spec)?;
    let kind = match v.verdict {
        LieVerdictKind::Settled => "settled",
        LieVerdictKind::NotSettledByLemma => "not-settled-by-lemma",
    };
    let mut out = String::new();
    line(&mut out, format!("{}({}): {kind}", args.family, args.q));
    line(&mut out, format!("|G| = {} = {order}", order.value()));
    line(&mut out, format!("q = {}^{}, alpha(f) = {}", spec.p, spec.f, v.c));
    line(&mut out, format!("tested value {} with alpha part {}", v.polynomial_value, v.alpha_value));
    line(
        &mut out,
        format!(
            "alpha(f) squarefree: {}, coprime: {}, alpha part squarefree: {}",
            v.c_squarefree, v.c_coprime, v.alpha_squarefree
        ),
    );
    let status = if v.verdict == LieVerdictKind::Settled { Status::Settled } else { Status::Open };
    let json = json!({
        "family": args.family,
        "q": args.q,
        "p": spec.p,
        "f": spec.f,
        "order": order.value().to_string(),
        "order_factored": order.to_string(),
        "alpha_f": v.c.to_string(),
        "tested_value": v.polynomial_value.to_string(),
        "alpha_part": v.alpha_value.to_string(),
        "alpha_f_squarefree": v.c_squarefree,
        "alpha_f_coprime": v.c_coprime,
        "alpha_part_squarefree": v.alpha_squarefree,
        "verdict": kind,
    });
    let csv = csv_table(
        &["family", "q", "tested_value", "alpha_part", "verdict"],
        [vec![
            args.family.to_string(),
            args.q.to_string(),
            v.polynomial_value.to_string(),
            v.alpha_value.to_string(),
            kind.to_string(),
        ]],
    );
    Ok(Report { status, text: out, json, csv })
}
