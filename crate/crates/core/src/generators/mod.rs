//! Graph families: basic twigs, `H_n`, `H_{n,k}`, cubic trees and their
//! squares, arranged-block expansions, and seeded random instances.

pub mod arranged;
pub mod families;
pub mod h_family;
pub mod random;

pub use arranged::{ArrangedBlock, WHITE};
pub use families::{add_universal, balanced_cubic_tree, basic_3twig, square};
pub use h_family::{
    build_h0, build_h0_plus, expand_hn, h0_certificate, h_family, hnk, validate_h0, Check, FamilyMetrics, H0Report,
};
pub use random::{random_chordal, random_ktree, random_tough_ktree, random_tree};
