//! Exact dynamic programming over clique-tree decompositions.

pub mod decomposition;
pub mod paths;
pub mod toughness;

/// Largest decomposition width the DP engines accept.
pub const WIDTH_LIMIT: usize = 6;

pub use decomposition::{clique_tree, nice_decomposition, CliqueTree, NiceDecomposition};
pub use paths::{
    hamilton_cycle, hamilton_path_between, has_hamilton_path_between, longest_cycle, longest_path, PathWitness,
};
pub use toughness::{separator_profile, toughness_exact, Toughness, ToughnessReport};
