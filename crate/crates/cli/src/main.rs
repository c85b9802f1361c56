//! `pgq`: checks for the prime graph question on integral group rings.
//!
//! Exit codes: 0 when the question asked is settled, 1 for an open or
//! inconclusive finding, 2 for unusable input.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(name = "pgq", version, about = "Prime graph question toolkit for integral group rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// HeLP feasibility for torsion units of a given order.
    HelpCheck(commands::help_check::Args),
    /// Prime-pair verdicts for a group profile.
    Verdict(commands::verdict::Args),
    /// Validate a Brauer tree and evaluate its eigenvalue inequality.
    TreeCheck(commands::tree_check::Args),
    /// Squarefree census of cyclotomic values over primes.
    Sieve(commands::sieve::Args),
    /// Squarefree criterion for a group of Lie type.
    Lie(commands::lie::Args),
    /// Exhaustive checks of the tableau lemmas.
    TableauxVerify(commands::tableaux::Args),
    /// Run every independent-oracle check and validate the bundled data.
    Selftest,
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("PGQ_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("PGQ_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            anyhow::bail!("PGQ_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::HelpCheck(a) => commands::help_check::run(a),
        Command::Verdict(a) => commands::verdict::run(a),
        Command::TreeCheck(a) => commands::tree_check::run(a),
        Command::Sieve(a) => commands::sieve::run(a),
        Command::Lie(a) => commands::lie::run(a),
        Command::TableauxVerify(a) => commands::tableaux::run(a),
        Command::Selftest => commands::selftest::run(),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
