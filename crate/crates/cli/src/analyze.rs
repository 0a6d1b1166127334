use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};
use toughtree::hamilton::{self, find_twigs};
use toughtree::ktree::recognize_ktree;
use toughtree::oracles::{
    bf_has_hamilton_cycle, bf_has_hamilton_path_between, bf_longest_cycle_weighted, bf_longest_path_weighted,
    bf_toughness,
};
use toughtree::squares::{
    find_pattern, square_has_hamilton_path, square_is_hamiltonian, square_structure_report, PatternKind,
};
use toughtree::twdp::{self, clique_tree, longest_cycle, longest_path, toughness_exact};
use toughtree::{Graph, Vertex};

use crate::{emit, read_graph};

#[derive(Args)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    op: Op,
    /// Graph JSON file, `-` for stdin.
    #[arg(long, short, global = true, default_value = "-")]
    input: PathBuf,
    /// Weight 1 on vertices with this label, 0 elsewhere.
    #[arg(long, global = true)]
    weight_label: Option<String>,
    /// Use the exhaustive oracles instead of the decomposition engine.
    #[arg(long, global = true)]
    pub brute_force: bool,
}

#[derive(Subcommand)]
enum Op {
    LongestPath,
    LongestCycle,
    Toughness,
    /// Clique-tree width and k-tree recognition.
    Structure {
        #[arg(long)]
        k: Option<usize>,
    },
    HamiltonPathExists {
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
    },
    /// Hamilton path witness; with `--k`, built by twig peeling on a tough k-tree.
    HamiltonPath {
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Hamilton cycle witness; with `--k`, built by twig peeling on a tough k-tree.
    HamiltonCycle {
        #[arg(long)]
        k: Option<usize>,
    },
    ThetaSpanner {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
    },
    Twigs {
        #[arg(long)]
        k: usize,
    },
    /// Square of a tree: pattern verdicts, or the patterns themselves.
    TreeSquare {
        #[arg(long, value_enum, default_value = "hamilton")]
        check: SquareCheck,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SquareCheck {
    Hamilton,
    Path,
    Patterns,
}

fn weights(g: &Graph, label: Option<&str>) -> Option<Vec<i64>> {
    label.map(|l| g.vertices().map(|v| i64::from(g.label(v) == Some(l))).collect())
}

fn engine(g: &Graph, op: &Op, w: Option<&[i64]>) -> Result<Value> {
    Ok(match *op {
        Op::LongestPath => {
            let (len, wit) = longest_path(g, w)?;
            json!({ "longest_path": len, "witness": wit.vertices })
        }
        Op::LongestCycle => {
            let (len, wit) = longest_cycle(g, w)?;
            json!({ "longest_cycle": len, "witness": wit.vertices })
        }
        Op::Toughness => {
            let r = toughness_exact(g)?;
            json!({ "toughness": r.value, "separator": r.witness, "components": r.components })
        }
        Op::Structure { k } => {
            let width = clique_tree(g)?.width;
            let mut out = json!({ "n": g.n(), "edges": g.edge_count(), "width": width });
            if let Some(k) = k {
                out["ktree"] = json!(recognize_ktree(g, k).is_some());
            }
            out
        }
        Op::HamiltonPathExists { from, to } => {
            json!({ "from": from, "to": to, "exists": twdp::has_hamilton_path_between(g, from, to)? })
        }
        Op::HamiltonPath { from, to, k: None } => match twdp::hamilton_path_between(g, from, to)? {
            Some(p) => json!({ "from": from, "to": to, "witness": p.vertices }),
            None => json!({ "from": from, "to": to, "witness": null }),
        },
        Op::HamiltonPath { from, to, k: Some(k) } => {
            let p = hamilton::hamilton_path_between(g, k, from, to)?;
            json!({ "from": from, "to": to, "witness": p.vertices, "constructive": true })
        }
        Op::HamiltonCycle { k: None } => match twdp::hamilton_cycle(g)? {
            Some(c) => json!({ "witness": c.vertices }),
            None => json!({ "witness": null }),
        },
        Op::HamiltonCycle { k: Some(k) } => {
            json!({ "witness": hamilton::hamilton_cycle(g, k)?.vertices, "constructive": true })
        }
        Op::ThetaSpanner { k, from, to } => serde_json::to_value(hamilton::theta_spanner(g, k, from, to)?)?,
        Op::Twigs { k } => serde_json::to_value(find_twigs(g, k)?)?,
        Op::TreeSquare { check } => tree_square(g, check)?,
    })
}

fn tree_square(t: &Graph, check: SquareCheck) -> Result<Value> {
    let found = |kind| -> Result<bool> { Ok(find_pattern(t, kind)?.is_some()) };
    Ok(match check {
        SquareCheck::Hamilton => json!({
            "hamiltonian": square_is_hamiltonian(t)?,
            "contains_sk13": found(PatternKind::SK13)?,
            "contains_f": found(PatternKind::FamilyF)?,
        }),
        SquareCheck::Path => json!({
            "hamilton_path": square_has_hamilton_path(t)?,
            "contains_sk15": found(PatternKind::SK15)?,
            "contains_f": found(PatternKind::FamilyF)?,
            "contains_x": found(PatternKind::FamilyX)?,
        }),
        SquareCheck::Patterns => {
            let mut witnesses = Vec::new();
            for kind in PatternKind::ALL {
                if let Some(w) = find_pattern(t, kind)? {
                    witnesses.push(w);
                }
            }
            json!({ "square": square_structure_report(t)?, "patterns": witnesses })
        }
    })
}

fn oracle(g: &Graph, op: &Op, w: Option<&[i64]>) -> Result<Value> {
    Ok(match *op {
        Op::LongestPath => json!({ "longest_path": bf_longest_path_weighted(g, w)? }),
        Op::LongestCycle => json!({ "longest_cycle": bf_longest_cycle_weighted(g, w)? }),
        Op::Toughness => {
            let r = bf_toughness(g)?;
            json!({ "toughness": r.value, "separator": r.witness, "components": r.components })
        }
        Op::HamiltonPathExists { from, to } => {
            json!({ "from": from, "to": to, "exists": bf_has_hamilton_path_between(g, from, to)? })
        }
        Op::HamiltonCycle { k: None } => json!({ "exists": bf_has_hamilton_cycle(g)? }),
        _ => bail!("this analysis has no brute-force mirror"),
    })
}

pub fn run(args: &AnalyzeArgs, brute_force: bool) -> Result<()> {
    let (g, _) = read_graph(&args.input)?;
    let w = weights(&g, args.weight_label.as_deref());
    let report = if brute_force { oracle(&g, &args.op, w.as_deref())? } else { engine(&g, &args.op, w.as_deref())? };
    emit(&(serde_json::to_string(&report)? + "\n"), None)
}
