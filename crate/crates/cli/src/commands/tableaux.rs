use anyhow::Result;
use clap::ValueEnum;
use pgq_core::tableaux::{
    verify_all, verify_lemma_columns_between_lines, verify_lemma_divided_tableau, verify_lemma_full_rectangle,
    verify_lemma_small_branch,
};
use serde_json::json;

use crate::output::{csv_table, line, Report, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Lemma {
    All,
    SmallBranch,
    FullRectangle,
    ColumnsBetweenLines,
    DividedTableau,
}

#[derive(clap::Args)]
pub struct Args {
    /// Largest number of boxes enumerated.
    #[arg(long, default_value_t = 8)]
    pub max_boxes: u32,
    #[arg(long, value_enum, default_value_t = Lemma::All)]
    pub lemma: Lemma,
}

pub fn run(args: &Args) -> Result<Report> {
    let n = args.max_boxes;
    let reports = match args.lemma {
        Lemma::All => verify_all(n)?,
        Lemma::SmallBranch => vec![verify_lemma_small_branch(n)?],
        Lemma::FullRectangle => vec![verify_lemma_full_rectangle(n)?],
        Lemma::ColumnsBetweenLines => vec![verify_lemma_columns_between_lines(n)?],
        Lemma::DividedTableau => vec![verify_lemma_divided_tableau(n)?],
    };
    let mut out = String::new();
    for r in &reports {
        line(
            &mut out,
            format!("{}: {} tableaux with <= {} boxes, {} violations", r.lemma, r.checked, r.max_boxes, r.violations.len()),
        );
        for v in r.violations.iter().take(5) {
            line(&mut out, format!("  {}: {}", v.tableau, v.detail));
        }
    }
    let status = if reports.iter().all(|r| r.passed()) { Status::Settled } else { Status::Open };
    let csv = csv_table(
        &["lemma", "max_boxes", "checked", "violations"],
        reports.iter().map(|r| {
            vec![r.lemma.clone(), r.max_boxes.to_string(), r.checked.to_string(), r.violations.len().to_string()]
        }),
    );
    Ok(Report { status, text: out, json: json!(reports), csv })
}
