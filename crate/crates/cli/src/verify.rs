use std::path::PathBuf;
use std::thread;

use anyhow::Result;
use clap::{Args, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use toughtree::generators::{balanced_cubic_tree, build_h0, expand_hn, random_ktree, square, validate_h0, Check};
use toughtree::oracles::{bf_longest_cycle, bf_longest_path, bf_toughness};
use toughtree::twdp::{longest_cycle, longest_path, toughness_exact, Toughness};
use toughtree::Graph;

use crate::{emit, read_graph, threads};

#[derive(Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    suite: Suite,
}

#[derive(Subcommand)]
enum Suite {
    /// Defining checks of H_0, on the built graph or on `--input`.
    H0 {
        #[arg(long, short)]
        input: Option<PathBuf>,
    },
    /// Size, toughness, longest cycle and path of H_1.
    H1,
    /// Squares of balanced cubic trees for r = 2..=max_r.
    TreeSquares {
        #[arg(long, default_value_t = 6)]
        max_r: usize,
    },
    /// Engine against brute force on seeded random k-trees.
    OracleEquivalence {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
}

#[derive(Serialize)]
struct Report {
    suite: &'static str,
    passed: bool,
    checks: Vec<Check>,
}

fn check(name: String, observed: impl ToString, expected: impl ToString) -> Check {
    let (o, e) = (observed.to_string(), expected.to_string());
    Check { name, passed: o == e, observed: o, expected: e }
}

fn h1() -> Result<Vec<Check>> {
    let g = expand_hn(&build_h0())?;
    Ok(vec![
        check("vertices".into(), g.n(), 2171),
        check("toughness".into(), toughness_exact(&g)?.value, Toughness::new(1, 1)),
        check("longest cycle".into(), longest_cycle(&g, None)?.0, 1427),
        check("longest path".into(), longest_path(&g, None)?.0, 1555),
    ])
}

fn tree_squares(max_r: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        let g = square(&balanced_cubic_tree(r)?);
        out.push(check(format!("r={r} vertices"), g.n(), 3 * (1usize << r) - 2));
        out.push(check(format!("r={r} toughness"), toughness_exact(&g)?.value, Toughness::new(1, 1)));
        out.push(check(format!("r={r} longest cycle"), longest_cycle(&g, None)?.0, 4 * r));
        out.push(check(format!("r={r} longest path"), longest_path(&g, None)?.0, 2 * r * r + 2));
    }
    Ok(out)
}

fn compare(i: usize, g: &Graph) -> Result<Check> {
    let dp = (longest_path(g, None)?.0 as usize, longest_cycle(g, None)?.0 as usize, toughness_exact(g)?.value);
    let bf = (bf_longest_path(g)?, bf_longest_cycle(g)?, bf_toughness(g)?.value);
    let show = |(p, c, t): (usize, usize, Toughness)| format!("path {p}, cycle {c}, toughness {t}");
    Ok(check(format!("instance {i} (n={})", g.n()), show(dp), show(bf)))
}

fn oracle_equivalence(seed: u64, count: usize, max_n: usize) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count)
        .map(|i| {
            let k = 2 + i % 3;
            let n = rng.random_range(k + 1..=max_n.max(k + 1));
            random_ktree(k, n, &mut rng).0
        })
        .collect();
    let chunk = graphs.len().div_ceil(threads()).max(1);
    let results: Vec<Result<Vec<Check>>> = thread::scope(|s| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| s.spawn(move || part.iter().enumerate().map(|(j, g)| compare(c * chunk + j, g)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(count);
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

pub fn run(args: &VerifyArgs) -> Result<bool> {
    let (suite, checks) = match &args.suite {
        Suite::H0 { input } => {
            let g = match input {
                Some(p) => read_graph(p)?.0,
                None => build_h0(),
            };
            ("h0", validate_h0(&g).checks)
        }
        Suite::H1 => ("h1", h1()?),
        Suite::TreeSquares { max_r } => ("tree-squares", tree_squares(*max_r)?),
        Suite::OracleEquivalence { seed, count, max_n } => {
            ("oracle-equivalence", oracle_equivalence(*seed, *count, *max_n)?)
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    if let Some(c) = checks.iter().find(|c| !c.passed) {
        eprintln!("check failed: {}: observed {}, expected {}", c.name, c.observed, c.expected);
    }
    emit(&(serde_json::to_string(&Report { suite, passed, checks })? + "\n"), None)?;
    Ok(passed)
}
