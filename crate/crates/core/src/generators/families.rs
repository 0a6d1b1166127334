//! Small fixed families: basic twigs, universal vertices, cubic trees, squares.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// `K_{k+1}` on `0..=k` plus three simplicial vertices `k+1, k+2, k+3`, the
/// `i`-th adjacent to every clique vertex except `i`.
pub fn basic_3twig(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("basic 3-twig needs k >= 2, got {k}")));
    }
    let mut g = Graph::complete(k + 1);
    for skip in 0..3 {
        let v = g.add_vertex();
        for w in (0..=k).filter(|&w| w != skip) {
            g.add_edge(v, w);
        }
        g.set_label(v, "white");
    }
    Ok(g)
}

/// Adds `m` vertices adjacent to everything, including each other.
pub fn add_universal(g: &Graph, m: usize) -> Graph {
    let mut h = g.clone();
    for _ in 0..m {
        let v = h.add_vertex();
        for w in 0..v {
            h.add_edge(v, w);
        }
    }
    h
}

/// Tree with a centre of degree 3, all internal vertices of degree 3 and every
/// leaf at distance `r` from the centre (vertex 0). Vertices are numbered in
/// breadth-first order.
pub fn balanced_cubic_tree(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::InvalidArgument("balanced cubic tree needs r >= 1".into()));
    }
    if r > 24 {
        return Err(Error::SizeGuard { n: 3 << r.min(40), limit: 3 << 24 });
    }
    let mut g = Graph::new(1);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((v, depth)) = queue.pop_front() {
        if depth == r {
            continue;
        }
        let children = if v == 0 { 3 } else { 2 };
        for _ in 0..children {
            let c = g.add_vertex();
            g.add_edge(v, c);
            queue.push_back((c, depth + 1));
        }
    }
    Ok(g)
}

/// Vertices at distance 1 or 2 become adjacent.
pub fn square(g: &Graph) -> Graph {
    let mut h = Graph::new(g.n());
    for (&v, tag) in g.labels() {
        h.set_label(v, tag.clone());
    }
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            if w > v {
                h.add_edge(v, w);
            }
            for &x in g.neighbors(w) {
                if x > v {
                    h.add_edge(v, x);
                }
            }
        }
    }
    h
}

/// Vertex ids of the leaves of a tree (degree at most 1).
pub fn leaves(t: &Graph) -> Vec<Vertex> {
    t.vertices().filter(|&v| t.degree(v) <= 1).collect()
}
