//! Hamiltonicity of tree squares via forbidden subtrees.
//!
//! A subtree of a tree is always induced, so "contains a copy" reduces to
//! degree and branch conditions:
//!
//! * `SK13`: a vertex with three neighbours of degree at least 2.
//! * `SK15`: the same with five neighbours.
//! * `FamilyF`: two such centres joined by a path (possibly a single edge) whose
//!   interior vertices each carry an extra pendant vertex; the three legs of a
//!   centre avoid the path.
//! * `FamilyX`: a branch vertex `z` with three legs of length at least 1 ending
//!   at vertices that each carry two further legs of length two. The legs are
//!   never empty: a tree with exactly three leaves has its branch vertex away
//!   from the leaves.

use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, is_elimination_order};
use crate::error::{Error, Result};
use crate::generators::families::square;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    SK13,
    SK15,
    FamilyF,
    FamilyX,
}

impl PatternKind {
    pub const ALL: [PatternKind; 4] =
        [PatternKind::SK13, PatternKind::SK15, PatternKind::FamilyF, PatternKind::FamilyX];
}

/// An embedded copy of a pattern, given by its parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// SK13/SK15: the centre; F: both centres; X: the branch vertex.
    pub centres: Vec<Vertex>,
    /// F: the path between the centres; X: the three paths from the branch
    /// vertex to the ends carrying the legs. Paths include both ends.
    pub paths: Vec<Vec<Vertex>>,
    /// Legs of length two as `[anchor, middle, end]`.
    pub legs: Vec<[Vertex; 3]>,
    /// F: `[interior path vertex, pendant]`.
    pub pendants: Vec<[Vertex; 2]>,
}

impl PatternWitness {
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut e = Vec::new();
        for p in &self.paths {
            e.extend(p.windows(2).map(|w| (w[0], w[1])));
        }
        for l in &self.legs {
            e.push((l[0], l[1]));
            e.push((l[1], l[2]));
        }
        for p in &self.pendants {
            e.push((p[0], p[1]));
        }
        e
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.edges().into_iter().flat_map(|(a, b)| [a, b]).collect();
        v.extend(&self.centres);
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Structural check against the host tree: the parts have the right shape,
    /// every edge exists in `t`, and the subtree has exactly `edges + 1` vertices.
    pub fn validate(&self, t: &Graph) -> bool {
        let edges = self.edges();
        let verts = self.vertices();
        if verts.iter().any(|&v| v >= t.n()) || edges.iter().any(|&(a, b)| !t.has_edge(a, b)) {
            return false;
        }
        if verts.len() != edges.len() + 1 {
            return false;
        }
        let legs_at = |a: Vertex| self.legs.iter().filter(|l| l[0] == a).count();
        match self.kind {
            PatternKind::SK13 | PatternKind::SK15 => {
                let want = if self.kind == PatternKind::SK13 { 3 } else { 5 };
                self.centres.len() == 1
                    && self.paths.is_empty()
                    && self.pendants.is_empty()
                    && self.legs.len() == want
                    && legs_at(self.centres[0]) == want
            }
            PatternKind::FamilyF => {
                let [c1, c2] = self.centres[..] else { return false };
                let [path] = &self.paths[..] else { return false };
                let interior = &path[1..path.len() - 1];
                path.len() >= 2
                    && path[0] == c1
                    && path[path.len() - 1] == c2
                    && self.legs.len() == 6
                    && legs_at(c1) == 3
                    && legs_at(c2) == 3
                    && self.pendants.len() == interior.len()
                    && interior.iter().all(|&x| self.pendants.iter().filter(|p| p[0] == x).count() == 1)
            }
            PatternKind::FamilyX => {
                let [z] = self.centres[..] else { return false };
                self.paths.len() == 3
                    && self.pendants.is_empty()
                    && self.legs.len() == 6
                    && self.paths.iter().all(|p| p.len() >= 2 && p[0] == z && legs_at(p[p.len() - 1]) == 2)
            }
        }
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotTree)
    }
}

/// Legs `[anchor, x, y]` with `x` a neighbour of `anchor` other than those in
/// `avoid`, `deg(x) >= 2`, and `y` the lowest neighbour of `x` besides `anchor`.
fn legs_from(t: &Graph, anchor: Vertex, avoid: &[Vertex]) -> Vec<[Vertex; 3]> {
    t.neighbors(anchor)
        .iter()
        .filter(|&&x| !avoid.contains(&x) && t.degree(x) >= 2)
        .map(|&x| {
            let y = *t.neighbors(x).iter().find(|&&y| y != anchor).unwrap();
            [anchor, x, y]
        })
        .collect()
}

fn find_star(t: &Graph, arms: usize, kind: PatternKind) -> Option<PatternWitness> {
    t.vertices().find_map(|c| {
        let legs = legs_from(t, c, &[]);
        (legs.len() >= arms).then(|| PatternWitness {
            kind,
            centres: vec![c],
            paths: Vec::new(),
            legs: legs[..arms].to_vec(),
            pendants: Vec::new(),
        })
    })
}

fn find_f(t: &Graph) -> Option<PatternWitness> {
    for c1 in t.vertices() {
        if legs_from(t, c1, &[]).len() < 4 {
            continue;
        }
        // search outward from c1 through interior vertices of degree >= 3
        let mut stack: Vec<Vec<Vertex>> = t.neighbors(c1).iter().map(|&x| vec![c1, x]).collect();
        stack.reverse();
        while let Some(path) = stack.pop() {
            let y = *path.last().unwrap();
            let prev = path[path.len() - 2];
            let first = path[1];
            let legs1 = legs_from(t, c1, &[first]);
            let legs2 = legs_from(t, y, &[prev]);
            if legs1.len() >= 3 && legs2.len() >= 3 {
                let interior = &path[1..path.len() - 1];
                let pendants = interior
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        let (a, b) = (path[i], path[i + 2]);
                        [x, *t.neighbors(x).iter().find(|&&p| p != a && p != b).unwrap()]
                    })
                    .collect();
                let mut legs = legs1[..3].to_vec();
                legs.extend_from_slice(&legs2[..3]);
                return Some(PatternWitness {
                    kind: PatternKind::FamilyF,
                    centres: vec![c1, y],
                    paths: vec![path],
                    legs,
                    pendants,
                });
            }
            if t.degree(y) >= 3 {
                for &z in t.neighbors(y).iter().rev() {
                    if z != prev {
                        let mut p = path.clone();
                        p.push(z);
                        stack.push(p);
                    }
                }
            }
        }
    }
    None
}

/// Path from `z` through `x` into the branch, ending at the first vertex with
/// two legs pointing away from `z`.
fn x_branch(t: &Graph, z: Vertex, x: Vertex) -> Option<(Vec<Vertex>, Vec<[Vertex; 3]>)> {
    let mut stack = vec![vec![z, x]];
    while let Some(path) = stack.pop() {
        let y = *path.last().unwrap();
        let prev = path[path.len() - 2];
        let legs = legs_from(t, y, &[prev]);
        if legs.len() >= 2 {
            return Some((path, legs[..2].to_vec()));
        }
        for &w in t.neighbors(y).iter().rev() {
            if w != prev {
                let mut p = path.clone();
                p.push(w);
                stack.push(p);
            }
        }
    }
    None
}

fn find_x(t: &Graph) -> Option<PatternWitness> {
    for z in t.vertices() {
        if t.degree(z) < 3 {
            continue;
        }
        let branches: Vec<_> = t.neighbors(z).iter().filter_map(|&x| x_branch(t, z, x)).take(3).collect();
        if branches.len() == 3 {
            let mut paths = Vec::new();
            let mut legs = Vec::new();
            for (p, l) in branches {
                paths.push(p);
                legs.extend(l);
            }
            return Some(PatternWitness {
                kind: PatternKind::FamilyX,
                centres: vec![z],
                paths,
                legs,
                pendants: Vec::new(),
            });
        }
    }
    None
}

/// A copy of the pattern in the tree `t`, if any (lowest centre first).
pub fn find_pattern(t: &Graph, kind: PatternKind) -> Result<Option<PatternWitness>> {
    require_tree(t)?;
    Ok(match kind {
        PatternKind::SK13 => find_star(t, 3, kind),
        PatternKind::SK15 => find_star(t, 5, kind),
        PatternKind::FamilyF => find_f(t),
        PatternKind::FamilyX => find_x(t),
    })
}

/// `T^2` is Hamiltonian iff `T` has no `S(K_{1,3})`.
pub fn square_is_hamiltonian(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    if t.n() < 3 {
        return Err(Error::InvalidArgument("the cycle criterion needs at least 3 vertices".into()));
    }
    Ok(find_pattern(t, PatternKind::SK13)?.is_none())
}

/// `T^2` has a Hamilton path iff `T` has no `S(K_{1,5})`, no member of F and no
/// member of X.
pub fn square_has_hamilton_path(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    for kind in [PatternKind::SK15, PatternKind::FamilyF, PatternKind::FamilyX] {
        if find_pattern(t, kind)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareReport {
    /// Re-verified on the built square.
    pub chordal: bool,
    /// No vertex of degree above 3.
    pub planar: bool,
    /// A breadth-first order of the tree is an elimination order of the square.
    pub tree_order_eliminates_square: bool,
}

/// Breadth-first order from vertex 0; each vertex has at most one earlier
/// neighbour, so it is an elimination order of the tree.
pub fn tree_elimination_order(t: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(t.n());
    let mut seen = vec![false; t.n()];
    for s in t.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

pub fn square_structure_report(t: &Graph) -> Result<SquareReport> {
    require_tree(t)?;
    let sq = square(t);
    Ok(SquareReport {
        chordal: is_chordal(&sq).is_some(),
        planar: t.max_degree() <= 3,
        tree_order_eliminates_square: is_elimination_order(&sq, &tree_elimination_order(t)),
    })
}
