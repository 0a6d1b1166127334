//! Exact toughness of chordal graphs of bounded width.
//!
//! Every bag of a clique-tree decomposition is a clique, so the kept vertices of
//! a bag always lie in a single open component. A state is therefore just the
//! subset of deleted bag vertices. For each state we store, for every number `c`
//! of components already closed off below, the fewest deletions achieving it.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use super::decomposition::{nice_for_chordal, NiceDecomposition, NiceKind};
use super::WIDTH_LIMIT;
use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles;

/// Largest graph handed to the subset-enumeration fallback.
pub const ORACLE_LIMIT: usize = 20;

/// Exact toughness value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Toughness {
    Finite(Ratio<u64>),
    Infinite,
}

impl Toughness {
    pub fn new(num: u64, den: u64) -> Self {
        Toughness::Finite(Ratio::new(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Toughness::Finite(_))
    }

    /// Strictly greater than `num/den`.
    pub fn exceeds(&self, num: u64, den: u64) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(r) => *r > Ratio::new(num, den),
        }
    }

    pub fn at_least(&self, num: u64, den: u64) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(r) => *r >= Ratio::new(num, den),
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Toughness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(Toughness::Infinite);
        }
        let (p, q) = s.split_once('/').ok_or_else(|| serde::de::Error::custom("expected p/q"))?;
        let p: u64 = p.trim().parse().map_err(serde::de::Error::custom)?;
        let q: u64 = q.trim().parse().map_err(serde::de::Error::custom)?;
        if q == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Toughness::new(p, q))
    }
}

/// Toughness with a separator achieving it (empty for complete graphs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessReport {
    pub value: Toughness,
    pub witness: Vec<Vertex>,
    pub components: usize,
}

impl ToughnessReport {
    /// Recomputes the ratio of the witness from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.value {
            Toughness::Infinite => g.is_complete(),
            Toughness::Finite(r) => {
                if self.witness.iter().any(|&v| v >= g.n()) {
                    return false;
                }
                let c = g.components_without(&self.witness);
                c >= 2 && c == self.components && Ratio::new(self.witness.len() as u64, c as u64) == r
            }
        }
    }
}

const INF: u32 = u32::MAX;

#[inline]
fn remove_bit(mask: u32, p: usize) -> u32 {
    let low = mask & ((1 << p) - 1);
    let high = (mask >> (p + 1)) << p;
    low | high
}

#[inline]
fn insert_bit(mask: u32, p: usize, bit: bool) -> u32 {
    let low = mask & ((1 << p) - 1);
    let high = (mask >> p) << (p + 1);
    low | high | ((bit as u32) << p)
}

fn full(len: usize) -> u32 {
    (1u32 << len) - 1
}

/// Per state (deleted mask), `t[c]` = fewest deletions among forgotten vertices
/// with exactly `c` closed components.
type Layer = Vec<Option<Vec<u32>>>;

fn relax(slot: &mut Option<Vec<u32>>, c: usize, val: u32) {
    let t = slot.get_or_insert_with(Vec::new);
    if t.len() <= c {
        t.resize(c + 1, INF);
    }
    if val < t[c] {
        t[c] = val;
    }
}

fn count_layers(nice: &NiceDecomposition) -> Vec<u32> {
    let nodes = &nice.nodes;
    let mut tables: Vec<Option<Layer>> = Vec::with_capacity(nodes.len());
    for node in nodes {
        let len = node.bag.len();
        let mut out: Layer = vec![None; 1 << len];
        match node.kind {
            NiceKind::Leaf => out[0] = Some(vec![0]),
            NiceKind::Introduce { vertex, child } => {
                let p = node.bag.binary_search(&vertex).unwrap();
                let ct = tables[child].take().unwrap();
                for (m, t) in ct.into_iter().enumerate() {
                    if let Some(t) = t {
                        out[insert_bit(m as u32, p, true) as usize] = Some(t.clone());
                        out[insert_bit(m as u32, p, false) as usize] = Some(t);
                    }
                }
            }
            NiceKind::Forget { vertex, child } => {
                let cbag = &nodes[child].bag;
                let p = cbag.binary_search(&vertex).unwrap();
                let ct = tables[child].take().unwrap();
                for (m, t) in ct.into_iter().enumerate() {
                    let Some(t) = t else { continue };
                    let m = m as u32;
                    let rest = remove_bit(m, p);
                    let slot = &mut out[rest as usize];
                    if m >> p & 1 == 1 {
                        for (c, &val) in t.iter().enumerate() {
                            if val != INF {
                                relax(slot, c, val + 1);
                            }
                        }
                    } else {
                        // v closes its component if no kept vertex stays in the bag
                        let closes = rest == full(len);
                        let shift = closes as usize;
                        for (c, &val) in t.iter().enumerate() {
                            if val != INF {
                                relax(slot, c + shift, val);
                            }
                        }
                    }
                }
            }
            NiceKind::Join { left, right } => {
                let a = tables[left].take().unwrap();
                let b = tables[right].take().unwrap();
                for (m, (ta, tb)) in a.iter().zip(b.iter()).enumerate() {
                    let (Some(ta), Some(tb)) = (ta, tb) else { continue };
                    let mut t = vec![INF; ta.len() + tb.len() - 1];
                    for (i, &x) in ta.iter().enumerate() {
                        if x == INF {
                            continue;
                        }
                        for (j, &y) in tb.iter().enumerate() {
                            if y != INF && x + y < t[i + j] {
                                t[i + j] = x + y;
                            }
                        }
                    }
                    // deleted bag vertices are counted on forget, so no correction
                    out[m] = Some(t);
                }
            }
        }
        tables.push(Some(out));
    }
    let root = tables.pop().unwrap().unwrap();
    root.into_iter().next().flatten().unwrap_or_default()
}

/// `s[m]` = fewest deletions leaving at least `m` components, for `m` in
/// `0..=n` (`None` when unattainable).
pub fn separator_profile(g: &Graph) -> Result<Vec<Option<usize>>> {
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    Ok(profile_from_counts(&count_layers(&nice), g.n()))
}

fn profile_from_counts(t: &[u32], n: usize) -> Vec<Option<usize>> {
    let mut s = vec![None; n + 1];
    let mut best: Option<usize> = None;
    for m in (0..=n).rev() {
        if let Some(&x) = t.get(m) {
            if x != INF {
                best = Some(best.map_or(x as usize, |b: usize| b.min(x as usize)));
            }
        }
        s[m] = best;
    }
    s
}

/// Finds `X` with `q|X| - p*c(G-X)` minimal subject to `c >= 2`; with `p/q`
/// the toughness this minimum is zero and `X` is a witness.
fn witness_for(nice: &NiceDecomposition, p: i64, q: i64) -> Vec<Vertex> {
    #[derive(Clone, Copy)]
    enum Back {
        None,
        Leaf,
        Intro(u32),
        Forget(u32),
        Join(u32, u32),
    }
    // cell index = mask * 3 + capped component count
    let nodes = &nice.nodes;
    let mut vals: Vec<Vec<i64>> = Vec::with_capacity(nodes.len());
    let mut backs: Vec<Vec<Back>> = Vec::with_capacity(nodes.len());
    const BAD: i64 = i64::MAX;
    for node in nodes {
        let len = node.bag.len();
        let mut v = vec![BAD; 3 << len];
        let mut b = vec![Back::None; 3 << len];
        let offer = |cell: usize, val: i64, back: Back, v: &mut Vec<i64>, b: &mut Vec<Back>| {
            if val < v[cell] {
                v[cell] = val;
                b[cell] = back;
            }
        };
        match node.kind {
            NiceKind::Leaf => offer(0, 0, Back::Leaf, &mut v, &mut b),
            NiceKind::Introduce { vertex, child } => {
                let p_ = node.bag.binary_search(&vertex).unwrap();
                for (cell, &val) in vals[child].iter().enumerate() {
                    if val == BAD {
                        continue;
                    }
                    let (m, c) = ((cell / 3) as u32, cell % 3);
                    for bit in [false, true] {
                        let nm = insert_bit(m, p_, bit) as usize;
                        offer(nm * 3 + c, val, Back::Intro(cell as u32), &mut v, &mut b);
                    }
                }
            }
            NiceKind::Forget { vertex, child } => {
                let cbag = &nodes[child].bag;
                let p_ = cbag.binary_search(&vertex).unwrap();
                for (cell, &val) in vals[child].iter().enumerate() {
                    if val == BAD {
                        continue;
                    }
                    let (m, c) = ((cell / 3) as u32, cell % 3);
                    let rest = remove_bit(m, p_);
                    let (nc, nv) = if m >> p_ & 1 == 1 {
                        (c, val + q)
                    } else if rest == full(len) {
                        ((c + 1).min(2), val - p)
                    } else {
                        (c, val)
                    };
                    offer(rest as usize * 3 + nc, nv, Back::Forget(cell as u32), &mut v, &mut b);
                }
            }
            NiceKind::Join { left, right } => {
                for m in 0..(1usize << len) {
                    for ca in 0..3 {
                        let x = vals[left][m * 3 + ca];
                        if x == BAD {
                            continue;
                        }
                        for cb in 0..3 {
                            let y = vals[right][m * 3 + cb];
                            if y == BAD {
                                continue;
                            }
                            let c = (ca + cb).min(2);
                            offer(
                                m * 3 + c,
                                x + y,
                                Back::Join((m * 3 + ca) as u32, (m * 3 + cb) as u32),
                                &mut v,
                                &mut b,
                            );
                        }
                    }
                }
            }
        }
        vals.push(v);
        backs.push(b);
    }
    let root = nodes.len() - 1;
    debug_assert!(vals[root][2] != BAD);
    let mut deleted = Vec::new();
    let mut stack = vec![(root, 2usize)];
    while let Some((id, cell)) = stack.pop() {
        match (nodes[id].kind, backs[id][cell]) {
            (NiceKind::Leaf, _) => {}
            (NiceKind::Introduce { child, .. }, Back::Intro(c)) => stack.push((child, c as usize)),
            (NiceKind::Forget { vertex, child }, Back::Forget(c)) => {
                let p_ = nodes[child].bag.binary_search(&vertex).unwrap();
                if (c as usize / 3) >> p_ & 1 == 1 {
                    deleted.push(vertex);
                }
                stack.push((child, c as usize));
            }
            (NiceKind::Join { left, right }, Back::Join(a, b)) => {
                stack.push((left, a as usize));
                stack.push((right, b as usize));
            }
            _ => unreachable!("inconsistent back-pointer"),
        }
    }
    deleted.sort_unstable();
    deleted
}

/// Toughness of a chordal graph via the decomposition DP.
pub fn toughness_dp(g: &Graph) -> Result<ToughnessReport> {
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    let t = count_layers(&nice);
    let mut best: Option<(u64, u64)> = None;
    for (c, &x) in t.iter().enumerate().skip(2) {
        if x == INF {
            continue;
        }
        let cand = (x as u64, c as u64);
        best = match best {
            Some((bx, bc)) if bx * cand.1 <= cand.0 * bc => Some((bx, bc)),
            _ => Some(cand),
        };
    }
    let Some((num, den)) = best else {
        return Ok(ToughnessReport { value: Toughness::Infinite, witness: Vec::new(), components: 1 });
    };
    let r = Ratio::new(num, den);
    let witness = witness_for(&nice, *r.numer() as i64, *r.denom() as i64);
    let components = g.components_without(&witness);
    let report = ToughnessReport { value: Toughness::Finite(r), witness, components };
    debug_assert!(report.verify(g));
    Ok(report)
}

/// Exact toughness: the DP on chordal graphs within the width guard, subset
/// enumeration for anything else with at most [`ORACLE_LIMIT`] vertices.
pub fn toughness_exact(g: &Graph) -> Result<ToughnessReport> {
    let dp = match is_chordal(g) {
        Some(_) => toughness_dp(g),
        None => Err(Error::NotChordal),
    };
    match dp {
        Ok(r) => Ok(r),
        Err(e @ (Error::NotChordal | Error::WidthGuard { .. })) => {
            if g.n() <= ORACLE_LIMIT {
                oracles::bf_toughness(g)
            } else {
                Err(e)
            }
        }
        Err(e) => Err(e),
    }
}
