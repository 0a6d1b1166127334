mod analyze;
mod generate;
mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use toughtree::io::{from_json, to_dot, to_json};
use toughtree::ktree::KTreeCertificate;
use toughtree::shortness::{shortness_table, Family};
use toughtree::Graph;

#[derive(Parser)]
#[command(name = "toughtree", version, about = "Tough chordal graphs, k-trees and their longest cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family member and print it as JSON or DOT.
    Gen(generate::GenArgs),
    /// Run an exact analysis on a graph file.
    Analyze(analyze::AnalyzeArgs),
    /// Same as `analyze --brute-force`: exhaustive oracles on small graphs.
    Oracle(analyze::AnalyzeArgs),
    /// Run a verification suite; exit code 0 iff every check passes.
    Verify(verify::VerifyArgs),
    /// Print `log_n(longest cycle)` along a family.
    ShortnessTable(ShortnessArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    HFamily,
    CubicSquare,
}

#[derive(clap::Args)]
struct ShortnessArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    max_level: usize,
    /// Allow closed-form rows past the DP range.
    #[arg(long)]
    closed_form: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

/// Reads a graph from a JSON file, or stdin for `-`.
pub fn read_graph(path: &PathBuf) -> Result<(Graph, Option<KTreeCertificate>)> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(from_json(&text)?)
}

pub fn render(g: &Graph, cert: Option<&KTreeCertificate>, format: Format) -> String {
    match format {
        Format::Json => to_json(g, cert) + "\n",
        Format::Dot => to_dot(g),
    }
}

/// Writes to `path`, or stdout when absent.
pub fn emit(text: &str, path: Option<&PathBuf>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Worker count from `TOUGHTREE_THREADS`, else the machine's parallelism.
pub fn threads() -> usize {
    std::env::var("TOUGHTREE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn shortness(args: &ShortnessArgs) -> Result<()> {
    let family = match args.family {
        FamilyArg::HFamily => Family::HFamily,
        FamilyArg::CubicSquare => Family::CubicSquare,
    };
    let table = shortness_table(family, args.max_level, args.closed_form)?;
    let text = if args.json { serde_json::to_string(&table)? + "\n" } else { format!("{table}\n") };
    emit(&text, None)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(a) => generate::run(&a).map(|()| true),
        Command::Analyze(a) => analyze::run(&a, a.brute_force).map(|()| true),
        Command::Oracle(a) => analyze::run(&a, true).map(|()| true),
        Command::Verify(a) => verify::run(&a),
        Command::ShortnessTable(a) => shortness(&a).map(|()| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
