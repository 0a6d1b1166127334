//! The planar 3-tree `H_0`, its expansions `H_n`, and the closed forms for
//! their sizes and longest cycles and paths.

use serde::{Deserialize, Serialize};

use super::arranged::{max_marked_on_cycle, ArrangedBlock, WHITE};
use super::families::add_universal;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ktree::{BuildStep, KTreeCertificate};
use crate::structure::is_planar_3tree;
use crate::twdp::paths::{longest_cycle, longest_path};
use crate::twdp::toughness::{toughness_exact, Toughness};

/// Vertex `i` is `u_{i+1}`. `u_1, u_2, u_3` span the outer triangle and `u_4`
/// is the apex shared by all ten copies of the basic 3-twig. Row `i` is the
/// attachment triangle of `u_{i+4}`.
///
/// Layout: `u_4` is joined to a maximal outerplanar graph on the cycle
/// `b1 .. b10 c1 d1 c2 d2 .. c10 d10`, whose ears are the `d`s and whose
/// remaining triangles zigzag between the `b` chain and the `c` chain. Each
/// triangle `u_4 c_i d_i` then receives a centre and three white vertices.
const H0_ATTACH: [[u8; 3]; 68] = [
    [0, 1, 2],
    [0, 2, 3],
    [1, 2, 3],
    [2, 3, 4],
    [0, 3, 4],
    [2, 3, 5],
    [1, 3, 5],
    [3, 4, 7],
    [3, 5, 9],
    [3, 4, 10],
    [3, 7, 10],
    [3, 5, 11],
    [3, 9, 11],
    [3, 10, 13],
    [3, 11, 15],
    [3, 10, 16],
    [3, 13, 16],
    [3, 11, 17],
    [3, 15, 17],
    [3, 16, 19],
    [3, 17, 21],
    [3, 16, 22],
    [3, 19, 22],
    [3, 17, 23],
    [3, 21, 23],
    [3, 22, 25],
    [3, 23, 27],
    [3, 23, 29],
    [3, 29, 30],
    [3, 29, 31],
    [3, 30, 31],
    [29, 30, 31],
    [3, 23, 26],
    [3, 23, 35],
    [3, 26, 35],
    [23, 26, 35],
    [3, 17, 20],
    [3, 17, 39],
    [3, 20, 39],
    [17, 20, 39],
    [3, 11, 14],
    [3, 11, 43],
    [3, 14, 43],
    [11, 14, 43],
    [3, 5, 8],
    [3, 5, 47],
    [3, 8, 47],
    [5, 8, 47],
    [2, 3, 6],
    [2, 3, 51],
    [3, 6, 51],
    [2, 6, 51],
    [3, 4, 12],
    [3, 4, 55],
    [3, 12, 55],
    [4, 12, 55],
    [3, 10, 18],
    [3, 10, 59],
    [3, 18, 59],
    [10, 18, 59],
    [3, 16, 24],
    [3, 16, 63],
    [3, 24, 63],
    [16, 24, 63],
    [3, 22, 28],
    [3, 22, 67],
    [3, 28, 67],
    [22, 28, 67],
];

pub const H0_ORDER: usize = 71;
pub const H0_WHITE_COUNT: usize = 30;
/// Outer triangle `u_1, u_2, u_3`.
pub const H0_OUTER: [Vertex; 3] = [0, 1, 2];
/// The apex `u_4`.
pub const H0_APEX: Vertex = 3;

/// Build certificate of `H_0` in the `u_1, ..., u_71` order.
pub fn h0_certificate() -> KTreeCertificate {
    KTreeCertificate {
        k: 3,
        base: vec![0, 1, 2],
        build_order: H0_ATTACH
            .iter()
            .enumerate()
            .map(|(i, t)| BuildStep { vertex: i + 3, clique: t.iter().map(|&x| x as Vertex).collect() })
            .collect(),
    }
}

/// `H_0` with white vertices tagged `white` and every other vertex `u<i>`.
pub fn build_h0() -> Graph {
    let mut g = h0_certificate().replay(H0_ORDER).expect("embedded H_0 data is a 3-tree certificate");
    for v in g.vertices() {
        if g.degree(v) == 3 {
            g.set_label(v, WHITE);
        } else {
            g.set_label(v, format!("u{}", v + 1));
        }
    }
    g
}

/// `H_0` plus a vertex `x` adjacent to `u_1, u_2, u_3`.
pub fn build_h0_plus() -> Graph {
    let mut g = build_h0();
    let x = g.add_vertex();
    for u in H0_OUTER {
        g.add_edge(x, u);
    }
    g.set_label(x, "x");
    g
}

/// `H_0` as an arranged block: white set, outer triangle as connectors, and
/// at most 22 white vertices on any cycle.
pub fn h0_block() -> ArrangedBlock {
    let g = build_h0();
    let white = g.vertices_labeled(WHITE);
    ArrangedBlock { g0: g, white, connectors: H0_OUTER.to_vec(), k: 22 }
}

/// One round of replacing every white vertex by a copy of `H_0`.
pub fn expand_hn(prev: &Graph) -> Result<Graph> {
    h0_block().replace_whites(prev)
}

/// Levels beyond this are refused (`H_4` would have about 57 million vertices).
pub const MAX_LEVEL: usize = 3;

/// `H_level`.
pub fn h_family(level: usize) -> Result<Graph> {
    if level > MAX_LEVEL {
        return Err(Error::SizeGuard { n: level, limit: MAX_LEVEL });
    }
    h0_block().expand(level)
}

/// `H_{level,k}`: `H_level` plus `k - 3` universal vertices.
pub fn hnk(level: usize, k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k = {k} is below 3")));
    }
    Ok(add_universal(&h_family(level)?, k - 3))
}

/// Closed forms for `H_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMetrics {
    pub n_index: usize,
    /// vertices
    pub f: u128,
    /// longest cycle
    pub c: u128,
    /// longest path
    pub p: u128,
    /// white vertices on a path
    pub w: u128,
}

impl FamilyMetrics {
    pub fn at(n: usize) -> Option<Self> {
        let sum30 = super::arranged::geometric(30, n)?;
        let sum22 = super::arranged::geometric(22, n)?;
        let c = |m: usize| -> Option<u128> { 1u128.checked_add(super::arranged::geometric(22, m)?.checked_mul(62)?) };
        let mut earlier: u128 = 0;
        for m in 0..n {
            earlier = earlier.checked_add(c(m)?)?;
        }
        let cn = c(n)?;
        Some(FamilyMetrics {
            n_index: n,
            f: sum30.checked_mul(70)?.checked_add(1)?,
            c: cn,
            p: cn.checked_add(2)?.checked_add(earlier.checked_mul(2)?)?,
            w: 22u128.checked_pow(n as u32 + 1)?.checked_add(2 * sum22)?,
        })
    }
}

/// Outcome of one validation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Report {
    pub checks: Vec<Check>,
}

impl H0Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn check(name: &str, observed: impl ToString, expected: impl ToString) -> Check {
    let (o, e) = (observed.to_string(), expected.to_string());
    Check { name: name.into(), passed: o == e, observed: o, expected: e }
}

fn failed(name: &str, err: impl ToString, expected: impl ToString) -> Check {
    Check {
        name: name.into(),
        passed: false,
        observed: format!("error: {}", err.to_string()),
        expected: expected.to_string(),
    }
}

/// Runs every defining check of `H_0` on `g`; white vertices are the
/// vertices of degree 3.
pub fn validate_h0(g: &Graph) -> H0Report {
    let mut checks = vec![check("vertices", g.n(), H0_ORDER)];
    let is_3tree = crate::ktree::recognize_ktree(g, 3).is_some();
    checks.push(check("3-tree", is_3tree, true));
    checks.push(match is_planar_3tree(g) {
        Ok(p) => check("planar", p, true),
        Err(e) => failed("planar", e, true),
    });
    let white: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    checks.push(check("white vertices", white.len(), H0_WHITE_COUNT));
    checks.push(check("white simplicial", white.iter().all(|&v| g.is_simplicial(v)), true));
    let one = Toughness::new(1, 1);
    checks.push(match toughness_exact(g) {
        Ok(r) => check("toughness", r.value, one),
        Err(e) => failed("toughness", e, one),
    });
    checks.push(match longest_cycle(g, None) {
        Ok((v, _)) => check("longest cycle", v, 63),
        Err(e) => failed("longest cycle", e, 63),
    });
    checks.push(match longest_path(g, None) {
        Ok((v, _)) => check("longest path", v, 65),
        Err(e) => failed("longest path", e, 65),
    });
    checks.push(match max_marked_on_cycle(g, &white) {
        Ok(v) => check("white per cycle", v, 22),
        Err(e) => failed("white per cycle", e, 22),
    });
    let mut w = vec![0i64; g.n()];
    for &v in &white {
        w[v] = 1;
    }
    checks.push(match longest_path(g, Some(&w)) {
        Ok((v, _)) => check("white per path", v, 24),
        Err(e) => failed("white per path", e, 24),
    });
    H0Report { checks }
}
