//! Connectivity and structural predicates on chordal graphs and 3-trees.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ktree::recognize_ktree;
use crate::twdp::decomposition::clique_tree_from_order;
use crate::twdp::toughness::toughness_exact;

/// Unit-capacity flow network on the vertex-split graph.
struct SplitFlow {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

impl SplitFlow {
    const NONE: usize = usize::MAX;

    fn new(g: &Graph, s: Vertex, t: Vertex) -> Self {
        let mut f = SplitFlow { head: vec![Self::NONE; 2 * g.n()], to: Vec::new(), cap: Vec::new(), next: Vec::new() };
        let big = g.n() as u32;
        for v in g.vertices() {
            // v_in = 2v, v_out = 2v + 1
            let c = if v == s || v == t { big } else { 1 };
            f.arc(2 * v, 2 * v + 1, c);
            for &w in g.neighbors(v) {
                f.arc(2 * v + 1, 2 * w, 1);
            }
        }
        f
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cap) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cap);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Number of augmenting paths found, stopping at `limit`.
    fn max_flow(&mut self, src: usize, dst: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![Self::NONE; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[src] = true;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                let mut e = self.head[x];
                while e != Self::NONE {
                    let y = self.to[e];
                    if self.cap[e] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = e;
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !seen[dst] {
                break;
            }
            let mut y = dst;
            while y != src {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint paths between non-adjacent `s` and
/// `t`, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let mut f = SplitFlow::new(g, s, t);
    f.max_flow(2 * s + 1, 2 * t, limit as u32) as usize
}

/// True iff `g` has more than `k` vertices and no separator of fewer than `k`.
///
/// A separator `X` with `|X| < k` misses one of any `k` fixed vertices, and that
/// vertex is separated from some other vertex; so only pairs containing one of
/// the first `k` vertices are tested.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    for s in 0..k {
        for t in 0..n {
            if t != s && !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Size of the largest clique of a chordal graph (largest clique-tree bag).
pub fn clique_number_chordal(g: &Graph) -> Option<usize> {
    let order = is_chordal(g)?;
    Some(clique_tree_from_order(g, &order).bags.iter().map(Vec::len).max().unwrap_or(0))
}

/// The characterisation of k-trees by chordality, k-connectivity and the absence
/// of a clique on `k + 2` vertices.
pub fn ktree_by_characterization(g: &Graph, k: usize) -> bool {
    if g.n() == k && g.is_complete() {
        return true;
    }
    match clique_number_chordal(g) {
        Some(w) => w < k + 2 && is_k_connected(g, k),
        None => false,
    }
}

/// Every triangle `{a, b, c}` with `a < b < c`.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn common_neighbors(g: &Graph, t: &[Vertex; 3]) -> usize {
    let [a, b, c] = *t;
    g.neighbors(a).iter().filter(|&&w| g.has_edge(b, w) && g.has_edge(c, w)).count()
}

/// Planarity of a 3-tree: removing any triangle leaves at most two components.
///
/// In a k-tree, deleting a k-clique leaves exactly as many components as the
/// clique has common neighbours (each common neighbour starts its own branch of
/// the construction), so the count is read off without a search.
pub fn is_planar_3tree(g: &Graph) -> Result<bool> {
    if recognize_ktree(g, 3).is_none() {
        return Err(Error::NotKTree { k: 3 });
    }
    Ok(triangles(g).iter().all(|t| common_neighbors(g, t) <= 2))
}

/// Same criterion, counting components by search. Quadratic; used for checks.
pub fn is_planar_3tree_by_search(g: &Graph) -> Result<bool> {
    if recognize_ktree(g, 3).is_none() {
        return Err(Error::NotKTree { k: 3 });
    }
    Ok(triangles(g).iter().all(|t| g.components_without(t) <= 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordalPlanarClass {
    ThreeTree,
    K1,
    K2,
    NotApplicable,
}

/// For a graph of toughness greater than 1: which of the chordal planar classes
/// it falls into, if any.
pub fn classify_tough_chordal_planar(g: &Graph) -> Result<ChordalPlanarClass> {
    let t = toughness_exact(g)?;
    if !t.value.exceeds(1, 1) {
        return Err(Error::Precondition(format!("toughness {} is not greater than 1", t.value)));
    }
    Ok(match g.n() {
        1 => ChordalPlanarClass::K1,
        2 => ChordalPlanarClass::K2,
        _ if recognize_ktree(g, 3).is_some() && is_planar_3tree(g)? => ChordalPlanarClass::ThreeTree,
        _ => ChordalPlanarClass::NotApplicable,
    })
}
