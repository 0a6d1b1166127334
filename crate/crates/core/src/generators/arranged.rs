//! Arranged blocks and the recursive white-vertex replacement.

use serde::{Deserialize, Serialize};

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles;
use crate::twdp::paths::longest_cycle;

pub const WHITE: &str = "white";

/// A graph `g0` with a set `white` of independent simplicial vertices, a clique
/// `connectors` disjoint from it, and a bound `k` on the number of white
/// vertices on any cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangedBlock {
    pub g0: Graph,
    pub white: Vec<Vertex>,
    pub connectors: Vec<Vertex>,
    pub k: usize,
}

/// Largest number of vertices of `set` on one cycle of `g`.
pub fn max_marked_on_cycle(g: &Graph, set: &[Vertex]) -> Result<usize> {
    let mut w = vec![0i64; g.n()];
    for &v in set {
        w[v] = 1;
    }
    if is_chordal(g).is_some() {
        if let Ok((val, _)) = longest_cycle(g, Some(&w)) {
            return Ok(val as usize);
        }
    }
    Ok(oracles::bf_longest_cycle_weighted(g, Some(&w))? as usize)
}

impl ArrangedBlock {
    /// Checks every block invariant, including the cycle bound.
    pub fn new(g0: Graph, white: Vec<Vertex>, connectors: Vec<Vertex>, k: usize) -> Result<Self> {
        let b = ArrangedBlock { g0, white, connectors, k };
        b.validate()?;
        Ok(b)
    }

    pub fn j(&self) -> usize {
        self.g0.n()
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.g0;
        let bad = |m: &str| Err(Error::Precondition(format!("arranged block: {m}")));
        if self.k < 1 {
            return bad("k must be at least 1");
        }
        if self.white.iter().chain(&self.connectors).any(|&v| v >= g.n()) {
            return bad("vertex out of range");
        }
        let mut sorted = self.white.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.white.len() {
            return bad("repeated white vertex");
        }
        if self.connectors.iter().any(|v| self.white.contains(v)) {
            return bad("white and connector sets intersect");
        }
        if !g.is_clique(&self.connectors) {
            return bad("connectors do not induce a complete graph");
        }
        for (i, &u) in self.white.iter().enumerate() {
            if !g.is_simplicial(u) {
                return bad("white vertex is not simplicial");
            }
            if self.white[i + 1..].iter().any(|&w| g.has_edge(u, w)) {
                return bad("white vertices are not independent");
            }
        }
        let worst = max_marked_on_cycle(g, &self.white)?;
        if worst > self.k {
            return bad(&format!("a cycle holds {worst} white vertices, above k = {}", self.k));
        }
        Ok(())
    }

    /// `g0` with its white vertices labelled.
    pub fn level0(&self) -> Graph {
        let mut g = self.g0.clone();
        for v in g.vertices() {
            if g.label(v) == Some(WHITE) {
                g.clear_label(v);
            }
        }
        for &w in &self.white {
            g.set_label(w, WHITE);
        }
        g
    }

    /// Replaces every white vertex of `prev` with a copy of `g0`. The `i`-th
    /// connector of the copy (0-based) is joined to the `max(1, d - i)` lowest
    /// neighbours of the replaced vertex, `d` its degree; for a 3-tree block this
    /// is the 3, 2, 1 pattern that keeps every insertion simplicial.
    pub fn replace_whites(&self, prev: &Graph) -> Result<Graph> {
        let whites = prev.vertices_labeled(WHITE);
        if whites.is_empty() {
            return Err(Error::Precondition("no white vertices to replace".into()));
        }
        let mut is_white = vec![false; prev.n()];
        for &w in &whites {
            is_white[w] = true;
        }
        let kept: Vec<Vertex> = prev.vertices().filter(|&v| !is_white[v]).collect();
        let mut new_id = vec![usize::MAX; prev.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let j = self.j();
        let total = kept.len() + whites.len() * j;
        let mut g = Graph::new(total);
        for &v in &kept {
            if let Some(tag) = prev.label(v) {
                g.set_label(new_id[v], tag.to_string());
            }
            for &w in prev.neighbors(v) {
                if !is_white[w] && w > v {
                    g.add_edge(new_id[v], new_id[w]);
                }
            }
        }
        let template = self.level0();
        for (ci, &w) in whites.iter().enumerate() {
            let off = kept.len() + ci * j;
            for u in template.vertices() {
                if let Some(tag) = template.label(u) {
                    g.set_label(off + u, tag.to_string());
                }
                for &x in template.neighbors(u) {
                    if x > u {
                        g.add_edge(off + u, off + x);
                    }
                }
            }
            let nb: Vec<Vertex> = prev.neighbors(w).iter().map(|&x| new_id[x]).collect();
            if nb.contains(&usize::MAX) {
                return Err(Error::Precondition("two white vertices are adjacent".into()));
            }
            let d = nb.len();
            for (i, &o) in self.connectors.iter().enumerate() {
                for &x in &nb[..d.saturating_sub(i).max(1).min(d)] {
                    g.add_edge(off + o, x);
                }
            }
        }
        Ok(g)
    }

    /// `G_n`: `n` rounds of replacement starting from the labelled `g0`.
    pub fn expand(&self, n: usize) -> Result<Graph> {
        let mut g = self.level0();
        for _ in 0..n {
            g = self.replace_whites(&g)?;
        }
        Ok(g)
    }

    /// `(vertex count, longest-cycle upper bound)` of `G_n`.
    pub fn closed_form_bounds(&self, n: usize) -> Result<(u128, u128)> {
        let j = self.j() as u128;
        let w = self.white.len() as u128;
        let k = self.k as u128;
        let ell = j - w + k;
        let vertices = geometric(w, n).and_then(|s| s.checked_mul(j - 1)).and_then(|x| x.checked_add(1));
        let cycle = geometric(k, n).and_then(|s| s.checked_mul(ell - 1)).and_then(|x| x.checked_add(1));
        match (vertices, cycle) {
            (Some(v), Some(c)) => Ok((v, c)),
            _ => Err(Error::InvalidArgument(format!("level {n} overflows the closed forms"))),
        }
    }
}

/// `1 + q + ... + q^n`, `None` on overflow.
pub fn geometric(q: u128, n: usize) -> Option<u128> {
    let mut sum: u128 = 0;
    let mut term: u128 = 1;
    for i in 0..=n {
        sum = sum.checked_add(term)?;
        if i < n {
            term = term.checked_mul(q)?;
        }
    }
    Some(sum)
}
