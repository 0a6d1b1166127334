//! Chordal graphs, k-trees and toughness: constructions, exact solvers and
//! brute-force oracles.

pub mod chordal;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod ktree;
pub mod oracles;
pub mod shortness;
pub mod squares;
pub mod structure;
pub mod twdp;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
