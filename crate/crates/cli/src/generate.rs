use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toughtree::generators::{
    balanced_cubic_tree, basic_3twig, h0_certificate, h_family, hnk, random_ktree, random_tough_ktree, random_tree,
    square,
};

use crate::{emit, render, Format};

#[derive(Args)]
pub struct GenArgs {
    #[command(subcommand)]
    family: Kind,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Also write a DOT rendering to this file.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Kind {
    /// H_n: the 71-vertex 3-tree H_0 with white vertices expanded `level` times.
    HFamily {
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
    /// H_{n,k}: H_n joined with k-3 universal vertices.
    Hnk {
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long)]
        k: usize,
    },
    /// Square of the balanced cubic tree of radius r.
    CubicSquare {
        #[arg(long)]
        r: usize,
    },
    /// The basic k-twig on k+4 vertices.
    Basic3twig {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Seeded random k-tree.
    RandomKtree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random k-tree with toughness above num/den.
    ToughKtree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        num: u64,
        #[arg(long, default_value_t = 1)]
        den: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random tree with bounded degree.
    RandomTree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(args: &GenArgs) -> Result<()> {
    let (g, cert) = match args.family {
        Kind::HFamily { level } => {
            let cert = (level == 0).then(h0_certificate);
            (h_family(level)?, cert)
        }
        Kind::Hnk { level, k } => (hnk(level, k)?, None),
        Kind::CubicSquare { r } => (square(&balanced_cubic_tree(r)?), None),
        Kind::Basic3twig { k } => (basic_3twig(k)?, None),
        Kind::RandomKtree { k, n, seed } => {
            let (g, c) = random_ktree(k, n, &mut ChaCha8Rng::seed_from_u64(seed));
            (g, Some(c))
        }
        Kind::ToughKtree { k, n, num, den, seed } => {
            let (g, c) = random_tough_ktree(k, n, num, den, &mut ChaCha8Rng::seed_from_u64(seed))?;
            (g, Some(c))
        }
        Kind::RandomTree { n, max_degree, seed } => {
            (random_tree(n, max_degree, &mut ChaCha8Rng::seed_from_u64(seed)), None)
        }
    };
    if let Some(path) = &args.dot {
        emit(&render(&g, None, Format::Dot), Some(path))?;
    }
    emit(&render(&g, cert.as_ref(), args.format), args.output.as_ref())
}
