//! k-tree recognition and build certificates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One step of a k-tree construction: `vertex` joins, adjacent to exactly `clique`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildStep {
    pub vertex: Vertex,
    pub clique: Vec<Vertex>,
}

/// Witness that a graph is a k-tree: a starting `K_k` on `base` and the order in
/// which the remaining vertices are attached to k-cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTreeCertificate {
    pub k: usize,
    pub base: Vec<Vertex>,
    pub build_order: Vec<BuildStep>,
}

impl KTreeCertificate {
    /// Rebuilds the graph on `n` vertices, checking that every attachment set is
    /// a k-clique at attachment time.
    pub fn replay(&self, n: usize) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.base.len() != self.k {
            return bad(format!("base has {} vertices, expected {}", self.base.len(), self.k));
        }
        if self.base.len() + self.build_order.len() != n {
            return bad("certificate does not cover every vertex".into());
        }
        let mut g = Graph::new(n);
        let mut present = vec![false; n];
        for (i, &u) in self.base.iter().enumerate() {
            if u >= n || present[u] {
                return bad(format!("bad base vertex {u}"));
            }
            present[u] = true;
            for &w in &self.base[..i] {
                g.add_edge(u, w);
            }
        }
        for step in &self.build_order {
            let v = step.vertex;
            if v >= n || present[v] {
                return bad(format!("bad build vertex {v}"));
            }
            if step.clique.len() != self.k {
                return bad(format!("attachment of {v} has size {}", step.clique.len()));
            }
            if step.clique.iter().any(|&w| w >= n || !present[w]) || !g.is_clique(&step.clique) {
                return bad(format!("attachment of {v} is not a present clique"));
            }
            present[v] = true;
            for &w in &step.clique {
                g.add_edge(v, w);
            }
        }
        Ok(g)
    }

    /// Checks that replaying the certificate yields exactly `g` (labels ignored).
    pub fn verify(&self, g: &Graph) -> bool {
        match self.replay(g.n()) {
            Ok(h) => (0..g.n()).all(|v| h.neighbors(v) == g.neighbors(v)),
            Err(_) => false,
        }
    }
}

/// Certificate iff `g` is a k-tree. Peels simplicial vertices of degree exactly
/// `k` until a `K_k` remains, then reverses the peel order.
pub fn recognize_ktree(g: &Graph, k: usize) -> Option<KTreeCertificate> {
    if k == 0 {
        return None;
    }
    let n = g.n();
    if n < k {
        return None;
    }
    let expected_edges = k * (k - 1) / 2 + k * (n - k);
    if g.edge_count() != expected_edges {
        return None;
    }
    if n == k {
        return g.is_complete().then(|| KTreeCertificate { k, base: (0..n).collect(), build_order: Vec::new() });
    }
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| degree[v] == k).collect();
    let mut queued = vec![false; n];
    for &v in &queue {
        queued[v] = true;
    }
    let mut peeled = Vec::with_capacity(n - k);
    let mut remaining = n;
    while remaining > k {
        let v = queue.pop_front()?;
        if !alive[v] || degree[v] != k {
            // degree can only drop, so a stale entry means the peel failed
            return None;
        }
        let clique: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        if !g.is_clique(&clique) {
            return None;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in &clique {
            degree[w] -= 1;
            if degree[w] == k && !queued[w] {
                queued[w] = true;
                queue.push_back(w);
            }
        }
        peeled.push(BuildStep { vertex: v, clique });
    }
    let base: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    if !g.is_clique(&base) {
        return None;
    }
    peeled.reverse();
    Some(KTreeCertificate { k, base, build_order: peeled })
}

/// Builds a k-tree from a certificate-like description: `K_k` on vertices
/// `0..k`, then vertex `k + i` attached to `attachments[i]`.
pub fn ktree_from_attachments(k: usize, attachments: &[Vec<Vertex>]) -> Result<Graph> {
    let cert = KTreeCertificate {
        k,
        base: (0..k).collect(),
        build_order: attachments
            .iter()
            .enumerate()
            .map(|(i, c)| BuildStep { vertex: k + i, clique: c.clone() })
            .collect(),
    };
    cert.replay(k + attachments.len())
}
