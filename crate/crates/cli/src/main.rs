mod commands;
mod json;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "sector-kit", version, about = "Superselection sectors, braid statistics, modular data and factorizing S-matrices")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Residual tolerance for pass/fail; each check has its own default.
    #[arg(long, global = true, env = "SECTORKIT_TOL")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classes, character table and S matrix of a permutation group.
    Group(commands::GroupArgs),
    /// Sectors and modular data of the quantum double of a permutation group.
    Double(commands::GroupArgs),
    /// Jones index of a multi-matrix inclusion.
    Index(commands::IndexArgs),
    /// Jones-Wenzl traces, Gram positivity and Markov traces of braid words.
    Tl(commands::TlArgs),
    /// Positivity scan over the statistics parameter plane.
    Scan(commands::ScanArgs),
    /// Verlinde fusion and modular relations of (S, T) data.
    Verlinde(commands::VerlindeArgs),
    /// Zamolodchikov-Faddeev relations, crossing and KMS checks.
    Zf(commands::ZfArgs),
    /// Magnetization commutators and sector overlaps on the spin chain.
    Chain(commands::ChainArgs),
}

/// Report plus whether every residual passed.
pub struct Report {
    pub body: serde_json::Value,
    pub pass: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match commands::run(&cli.command, cli.tol) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let text = serde_json::to_string_pretty(&report.body).expect("reports serialize") + "\n";
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(if report.pass { 0 } else { 2 })
}
