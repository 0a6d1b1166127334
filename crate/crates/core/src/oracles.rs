//! Brute-force ground truth for small graphs. Nothing here shares code with the
//! decomposition engine beyond the `Graph` type.

use std::collections::{BTreeSet, HashSet};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::twdp::toughness::{Toughness, ToughnessReport};

pub const PATH_LIMIT: usize = 18;
pub const TOUGHNESS_LIMIT: usize = 20;

fn masks(g: &Graph, limit: usize) -> Result<Vec<u32>> {
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    Ok((0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect())
}

/// `reach[mask]` has bit `v` set iff some path with vertex set `mask` ends at `v`
/// (and, when `start` is given, begins at `start`).
fn reach_table(adj: &[u32], start: Option<Vertex>) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n];
    match start {
        Some(s) => reach[1 << s] = 1 << s,
        None => {
            for v in 0..n {
                reach[1 << v] = 1 << v;
            }
        }
    }
    for mask in 1usize..(1 << n) {
        let mut ends = reach[mask];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    reach
}

fn mask_weight(mask: usize, weights: Option<&[i64]>) -> i64 {
    match weights {
        None => mask.count_ones() as i64,
        Some(w) => (0..w.len()).filter(|&v| mask >> v & 1 == 1).map(|v| w[v]).sum(),
    }
}

/// Maximum weight (vertex count by default) of a path, by Held–Karp over subsets.
pub fn bf_longest_path_weighted(g: &Graph, weights: Option<&[i64]>) -> Result<i64> {
    let adj = masks(g, PATH_LIMIT)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let reach = reach_table(&adj, None);
    Ok((1..reach.len()).filter(|&m| reach[m] != 0).map(|m| mask_weight(m, weights)).max().unwrap_or(0))
}

pub fn bf_longest_path(g: &Graph) -> Result<usize> {
    Ok(bf_longest_path_weighted(g, None)? as usize)
}

/// Maximum weight of a cycle on at least three vertices; 0 when acyclic.
pub fn bf_longest_cycle_weighted(g: &Graph, weights: Option<&[i64]>) -> Result<i64> {
    let adj = masks(g, PATH_LIMIT)?;
    let n = g.n();
    let mut best = 0;
    // cycles are rooted at their lowest vertex
    for s in 0..n {
        let sub: Vec<u32> = adj.iter().map(|&m| m & !((1u32 << s) - 1)).collect();
        let reach = reach_table(&sub, Some(s));
        for (mask, &ends) in reach.iter().enumerate() {
            if mask.count_ones() >= 3 && ends & adj[s] != 0 {
                best = best.max(mask_weight(mask, weights));
            }
        }
    }
    Ok(best)
}

pub fn bf_longest_cycle(g: &Graph) -> Result<usize> {
    Ok(bf_longest_cycle_weighted(g, None)? as usize)
}

pub fn bf_has_hamilton_path_between(g: &Graph, x1: Vertex, x2: Vertex) -> Result<bool> {
    let adj = masks(g, PATH_LIMIT)?;
    if x1 >= g.n() || x2 >= g.n() {
        return Err(Error::VertexOutOfRange(x1.max(x2)));
    }
    let reach = reach_table(&adj, Some(x1));
    Ok(reach[(1usize << g.n()) - 1] >> x2 & 1 == 1)
}

pub fn bf_has_hamilton_cycle(g: &Graph) -> Result<bool> {
    Ok(g.n() >= 3 && bf_longest_cycle(g)? == g.n())
}

fn components_of(adj: &[u32], alive: u32) -> (usize, Vec<u32>) {
    let mut rest = alive;
    let mut comps = Vec::new();
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & alive & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        comps.push(comp);
    }
    (comps.len(), comps)
}

/// Toughness by enumerating every vertex subset. Only subsets in which each
/// deleted vertex touches at least two remaining components are scored: putting
/// back a vertex that touches at most one never lowers the component count.
pub fn bf_toughness(g: &Graph) -> Result<ToughnessReport> {
    let adj = masks(g, TOUGHNESS_LIMIT)?;
    let n = g.n();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<(u64, u64, u32)> = None;
    for x in 0u32..=all {
        if n == 0 {
            break;
        }
        let alive = all & !x;
        let (c, comps) = components_of(&adj, alive);
        if c < 2 {
            continue;
        }
        let mut ok = true;
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let touched = comps.iter().filter(|&&m| adj[v] & m != 0).count();
            if touched < 2 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let size = x.count_ones() as u64;
        let c = c as u64;
        let better = match best {
            None => true,
            Some((bs, bc, bx)) => size * bc < bs * c || (size * bc == bs * c && (size < bs || (size == bs && x < bx))),
        };
        if better {
            best = Some((size, c, x));
        }
    }
    Ok(match best {
        None => ToughnessReport { value: Toughness::Infinite, witness: Vec::new(), components: 1 },
        Some((s, c, x)) => ToughnessReport {
            value: Toughness::Finite(Ratio::new(s, c)),
            witness: (0..n).filter(|&v| x >> v & 1 == 1).collect(),
            components: c as usize,
        },
    })
}

/// Canonical adjacency encoding: the lexicographically least upper-triangle
/// bit string over the leaves of an individualisation-refinement search.
/// Twins are branched on only once since swapping them is an automorphism.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let cells = refine(g, vec![(0..n).collect()]);
    let mut best: Option<Vec<u64>> = None;
    search(g, cells, &mut best);
    best.unwrap_or_default()
}

fn encode(g: &Graph, order: &[Vertex]) -> Vec<u64> {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u64; bits.div_ceil(64) + 1];
    out[0] = n as u64;
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                out[1 + idx / 64] |= 1 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    out
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Graph, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let n = g.n();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, Vertex)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let strip = |a: Vertex, b: Vertex| g.neighbors(a).iter().copied().filter(move |&w| w != b);
    strip(u, v).eq(strip(v, u))
}

fn search(g: &Graph, cells: Vec<Vec<Vertex>>, best: &mut Option<Vec<u64>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<Vertex> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, refine(g, split), best);
    }
}

/// All k-trees on `n` vertices up to isomorphism, keyed by canonical form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnumerationIndex {
    pub k: usize,
    pub n: usize,
    pub graphs: Vec<Graph>,
}

/// Size guard for plain enumeration.
pub const ENUM_EXTRA: usize = 7;

/// Every k-tree on `n` vertices up to isomorphism (`k <= 4`, `n <= k + 7`).
pub fn enumerate_ktrees(k: usize, n: usize) -> Result<EnumerationIndex> {
    if k == 0 || k > 4 {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..=4")));
    }
    if n > k + ENUM_EXTRA {
        return Err(Error::SizeGuard { n, limit: k + ENUM_EXTRA });
    }
    grow_ktrees(k, n, |_| true)
}

/// k-trees on `n` vertices whose toughness is at least (or, with `strict`,
/// greater than) `num/den`. Toughness never increases when a simplicial vertex
/// is added, so every such graph grows from a smaller one passing the same
/// filter and the search is pruned level by level.
pub fn enumerate_tough_ktrees(k: usize, n: usize, num: u64, den: u64, strict: bool) -> Result<EnumerationIndex> {
    if k == 0 || k > 4 {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..=4")));
    }
    if n > TOUGHNESS_LIMIT {
        return Err(Error::SizeGuard { n, limit: TOUGHNESS_LIMIT });
    }
    grow_ktrees(k, n, |g| {
        let t = bf_toughness(g).expect("within guard").value;
        if strict {
            t.exceeds(num, den)
        } else {
            t.at_least(num, den)
        }
    })
}

fn grow_ktrees(k: usize, n: usize, keep: impl Fn(&Graph) -> bool) -> Result<EnumerationIndex> {
    if n < k {
        return Ok(EnumerationIndex { k, n, graphs: Vec::new() });
    }
    let base = Graph::complete(k);
    let mut level: Vec<Graph> = if keep(&base) { vec![base] } else { Vec::new() };
    for size in k..n {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for clique in k_cliques(g, k) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for &w in &clique {
                    h.add_edge(v, w);
                }
                if seen.insert(canonical_form(&h)) && keep(&h) {
                    next.push(h);
                }
            }
        }
        debug_assert!(next.iter().all(|g| g.n() == size + 1));
        level = next;
    }
    Ok(EnumerationIndex { k, n, graphs: level })
}

/// All k-cliques, as sorted vertex lists (brute force; fine for tiny graphs).
pub fn k_cliques(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    fn rec(g: &Graph, k: usize, from: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                rec(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Canonical string of a tree rooted at its centre(s) (AHU encoding).
pub fn tree_canonical_form(t: &Graph) -> String {
    let n = t.n();
    if n == 0 {
        return String::new();
    }
    // centres by repeated leaf stripping
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn code(t: &Graph, v: Vertex, parent: Vertex) -> String {
        let mut kids: Vec<String> = t.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| code(t, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| code(t, c, usize::MAX)).min().unwrap()
}

/// All trees on `n` vertices up to isomorphism, grown leaf by leaf.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1)];
    for _ in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let mut h = t.clone();
                let w = h.add_vertex();
                h.add_edge(v, w);
                if seen.insert(tree_canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}
