//! Longest path / longest cycle / constrained Hamilton path over a nice
//! decomposition.
//!
//! A partial solution restricted to a bag is a set of path segments. Each bag
//! vertex is either unused, interior (degree 2 so far), or the end of a segment.
//! An end records its partner end: another bag vertex, itself (a lone vertex of
//! degree 0), or a forgotten vertex that was fixed as a final path end. Edges are
//! decided when the first of their endpoints is forgotten, so every edge is
//! considered exactly once.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::decomposition::{nice_for_chordal, NiceDecomposition, NiceKind};
use super::WIDTH_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{is_cycle, is_path, Graph, Vertex};

/// An explicit vertex sequence; when `cyclic`, the last vertex is adjacent to the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
    pub cyclic: bool,
}

impl PathWitness {
    pub fn path(vertices: Vec<Vertex>) -> Self {
        PathWitness { vertices, cyclic: false }
    }

    pub fn cycle(vertices: Vec<Vertex>) -> Self {
        PathWitness { vertices, cyclic: true }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Adjacency and no repeats; cycles need at least three vertices.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.cyclic {
            is_cycle(g, &self.vertices)
        } else {
            is_path(g, &self.vertices)
        }
    }

    /// Valid and covering every vertex of `g`.
    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.vertices.len() == g.n() && self.is_valid_in(g)
    }

    pub fn weight(&self, weights: Option<&[i64]>) -> i64 {
        match weights {
            None => self.vertices.len() as i64,
            Some(w) => self.vertices.iter().map(|&v| w[v]).sum(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Path,
    Cycle,
}

/// What to optimise: the shape, optional vertex weights (default 1 each),
/// whether every vertex must be used, and optional forced path ends.
#[derive(Debug, Clone, Copy)]
pub struct Query<'a> {
    pub shape: Shape,
    pub weights: Option<&'a [i64]>,
    pub spanning: bool,
    pub ends: Option<(Vertex, Vertex)>,
}

const OUT: u8 = 0;
const DEG2: u8 = 1;
const FIN: u8 = 2;
const PAIR: u8 = 0x10;
const FLAG_BYTE: usize = 7;

#[inline]
fn get(s: u64, i: usize) -> u8 {
    (s >> (8 * i)) as u8
}

#[inline]
fn set(s: u64, i: usize, c: u8) -> u64 {
    (s & !(0xFFu64 << (8 * i))) | ((c as u64) << (8 * i))
}

#[inline]
fn fin_count(s: u64) -> u8 {
    get(s, FLAG_BYTE) & 3
}

#[inline]
fn closed(s: u64) -> bool {
    get(s, FLAG_BYTE) & 4 != 0
}

#[inline]
fn with_flags(s: u64, fin: u8, closed: bool) -> u64 {
    set(s, FLAG_BYTE, fin | if closed { 4 } else { 0 })
}

#[inline]
fn is_end(c: u8) -> bool {
    c == FIN || c & PAIR != 0
}

#[inline]
fn degree(c: u8, i: usize) -> u8 {
    match c {
        OUT => 0,
        DEG2 => 2,
        FIN => 1,
        _ if (c & 0x0F) as usize == i => 0,
        _ => 1,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    Pos(usize),
    Fin,
}

fn any_end(s: u64, len: usize, skip: usize) -> bool {
    (0..len).any(|i| i != skip && is_end(get(s, i)))
}

/// Adds the edge between bag positions `i` and `j`.
fn add_edge(s: u64, len: usize, i: usize, j: usize, shape: Shape) -> Option<u64> {
    let (ci, cj) = (get(s, i), get(s, j));
    if !is_end(ci) || !is_end(cj) {
        return None;
    }
    let partner = |c: u8| -> End {
        if c == FIN {
            End::Fin
        } else {
            End::Pos((c & 0x0F) as usize)
        }
    };
    let (pi, pj) = (partner(ci), partner(cj));
    if pi == End::Pos(j) {
        // closing a cycle
        if shape != Shape::Cycle || fin_count(s) != 0 {
            return None;
        }
        let t = set(set(s, i, DEG2), j, DEG2);
        if any_end(t, len, usize::MAX) {
            return None;
        }
        return Some(with_flags(t, 0, true));
    }
    let mut t = s;
    // the far ends of the merged segment
    let a = if degree(ci, i) == 0 {
        End::Pos(i)
    } else {
        t = set(t, i, DEG2);
        pi
    };
    let b = if degree(cj, j) == 0 {
        End::Pos(j)
    } else {
        t = set(t, j, DEG2);
        pj
    };
    let code_for = |e: End| match e {
        End::Pos(p) => PAIR | p as u8,
        End::Fin => FIN,
    };
    if let End::Pos(p) = a {
        t = set(t, p, code_for(b));
    }
    if let End::Pos(p) = b {
        t = set(t, p, code_for(a));
    }
    if a == End::Fin && b == End::Fin {
        if any_end(t, len, usize::MAX) {
            return None;
        }
        t = with_flags(t, fin_count(t), true);
    }
    Some(t)
}

/// Removes position `p`, shifting later positions down.
fn drop_position(s: u64, len: usize, p: usize) -> u64 {
    let mut t = s & (0xFFu64 << (8 * FLAG_BYTE));
    let mut k = 0;
    for i in 0..len {
        if i == p {
            continue;
        }
        let mut c = get(s, i);
        if c & PAIR != 0 {
            let q = (c & 0x0F) as usize;
            debug_assert!(q != p);
            if q > p {
                c = PAIR | (q - 1) as u8;
            }
        }
        t = set(t, k, c);
        k += 1;
    }
    t
}

/// Inserts a new position at `p` with code `c` (a `PAIR` code must point at `p`).
fn insert_position(s: u64, len: usize, p: usize, c: u8) -> u64 {
    let mut t = s & (0xFFu64 << (8 * FLAG_BYTE));
    for i in 0..len {
        let mut code = get(s, i);
        if code & PAIR != 0 {
            let q = (code & 0x0F) as usize;
            if q >= p {
                code = PAIR | (q + 1) as u8;
            }
        }
        let k = if i >= p { i + 1 } else { i };
        t = set(t, k, code);
    }
    set(t, p, c)
}

#[derive(Clone, Copy)]
enum Back {
    Leaf,
    Introduce(u32),
    Forget(u32, u8),
    Join(u32, u32),
}

struct Table {
    keys: Vec<u64>,
    vals: Vec<i64>,
    backs: Vec<Back>,
    index: HashMap<u64, usize>,
}

impl Table {
    fn new() -> Self {
        Table { keys: Vec::new(), vals: Vec::new(), backs: Vec::new(), index: HashMap::new() }
    }

    fn offer(&mut self, key: u64, val: i64, back: Back) {
        match self.index.get(&key) {
            Some(&i) => {
                if val > self.vals[i] {
                    self.vals[i] = val;
                    self.backs[i] = back;
                }
            }
            None => {
                self.index.insert(key, self.keys.len());
                self.keys.push(key);
                self.vals.push(val);
                self.backs.push(back);
            }
        }
    }

    fn seal(&mut self) {
        self.index = HashMap::new();
    }
}

fn join_states(a: u64, b: u64, len: usize, shape: Shape) -> Option<u64> {
    let fin = fin_count(a) + fin_count(b);
    if fin > 2 || (closed(a) && closed(b)) {
        return None;
    }
    // segment graph over positions 0..len and fin tokens len..len+4
    let mut links: [[usize; 2]; 12] = [[usize::MAX; 2]; 12];
    let mut deg = [0usize; 12];
    let mut next_token = len;
    let mut out = 0u64;
    let link = |x: usize, y: usize, links: &mut [[usize; 2]; 12], deg: &mut [usize; 12]| {
        links[x][deg[x]] = y;
        deg[x] += 1;
        links[y][deg[y]] = x;
        deg[y] += 1;
    };
    for i in 0..len {
        let (ca, cb) = (get(a, i), get(b, i));
        if (ca == OUT) != (cb == OUT) {
            return None;
        }
        if ca == OUT {
            continue;
        }
        if degree(ca, i) + degree(cb, i) > 2 {
            return None;
        }
        for c in [ca, cb] {
            if c == FIN {
                let tok = next_token;
                next_token += 1;
                link(i, tok, &mut links, &mut deg);
            } else if c & PAIR != 0 {
                let q = (c & 0x0F) as usize;
                if q > i {
                    link(i, q, &mut links, &mut deg);
                }
            }
        }
        let interior = ca == DEG2 || cb == DEG2;
        out = set(out, i, if interior { DEG2 } else { PAIR | i as u8 });
    }
    let mut completions = closed(a) as u8 + closed(b) as u8;
    let mut seen = [false; 12];
    for start in 0..next_token {
        if seen[start] || deg[start] != 1 {
            continue;
        }
        // walk the path from this end to the other
        let mut prev = start;
        let mut cur = links[start][0];
        while deg[cur] == 2 {
            seen[cur] = true;
            if cur < len {
                out = set(out, cur, DEG2);
            }
            let nxt = if links[cur][0] != prev { links[cur][0] } else { links[cur][1] };
            prev = cur;
            cur = nxt;
        }
        seen[start] = true;
        seen[cur] = true;
        let end = cur;
        let code_for = |e: usize| if e >= len { FIN } else { PAIR | e as u8 };
        match (start < len, end < len) {
            (true, true) => {
                out = set(out, start, code_for(end));
                out = set(out, end, code_for(start));
            }
            (true, false) => out = set(out, start, FIN),
            (false, true) => out = set(out, end, FIN),
            (false, false) => completions += 1,
        }
    }
    for start in 0..len {
        if !seen[start] && deg[start] == 2 {
            // a closed cycle through bag vertices
            if shape != Shape::Cycle {
                return None;
            }
            let mut prev = usize::MAX;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                out = set(out, cur, DEG2);
                let nxt = if links[cur][0] != prev { links[cur][0] } else { links[cur][1] };
                prev = cur;
                cur = nxt;
            }
            completions += 1;
        }
    }
    if completions > 1 {
        return None;
    }
    let is_closed = completions == 1;
    if is_closed && any_end(out, len, usize::MAX) {
        return None;
    }
    Some(with_flags(out, fin, is_closed))
}

struct Solver<'a> {
    g: &'a Graph,
    nice: &'a NiceDecomposition,
    q: Query<'a>,
}

impl Solver<'_> {
    fn weight(&self, v: Vertex) -> i64 {
        self.q.weights.map_or(1, |w| w[v])
    }

    fn is_forced_end(&self, v: Vertex) -> bool {
        matches!(self.q.ends, Some((x, y)) if v == x || v == y)
    }

    /// Finalises vertex at position `p` of a state (edges already decided).
    fn finalize(&self, s: u64, len: usize, p: usize, v: Vertex) -> Option<(u64, i64)> {
        let c = get(s, p);
        let shape = self.q.shape;
        let (t, gain) = match c {
            OUT => {
                if self.q.spanning {
                    return None;
                }
                (s, 0)
            }
            DEG2 => {
                if self.is_forced_end(v) {
                    return None;
                }
                (s, self.weight(v))
            }
            _ => {
                if shape == Shape::Cycle {
                    return None;
                }
                if self.q.ends.is_some() && !self.is_forced_end(v) {
                    return None;
                }
                let fin = fin_count(s);
                if c == FIN {
                    if fin + 1 > 2 || any_end(s, len, p) {
                        return None;
                    }
                    (with_flags(s, fin + 1, true), self.weight(v))
                } else if (c & 0x0F) as usize == p {
                    // a single-vertex path
                    if fin != 0 || self.q.ends.is_some() || any_end(s, len, p) {
                        return None;
                    }
                    (with_flags(s, 2, true), self.weight(v))
                } else {
                    if fin + 1 > 2 {
                        return None;
                    }
                    let q = (c & 0x0F) as usize;
                    (with_flags(set(s, q, FIN), fin + 1, closed(s)), self.weight(v))
                }
            }
        };
        Some((drop_position(t, len, p), gain))
    }

    fn run(&self) -> (Vec<Table>, usize) {
        let nodes = &self.nice.nodes;
        let mut keep: Vec<Table> = Vec::with_capacity(nodes.len());
        for (id, node) in nodes.iter().enumerate() {
            let mut out = Table::new();
            match node.kind {
                NiceKind::Leaf => out.offer(0, 0, Back::Leaf),
                NiceKind::Introduce { vertex, child } => {
                    let ct = &keep[child];
                    let p = node.bag.binary_search(&vertex).unwrap();
                    let len = node.bag.len() - 1;
                    for (ci, &s) in ct.keys.iter().enumerate() {
                        let val = ct.vals[ci];
                        if !self.q.spanning {
                            out.offer(insert_position(s, len, p, OUT), val, Back::Introduce(ci as u32));
                        }
                        if !closed(s) {
                            out.offer(insert_position(s, len, p, PAIR | p as u8), val, Back::Introduce(ci as u32));
                        }
                    }
                }
                NiceKind::Forget { vertex, child } => {
                    let ct = &keep[child];
                    let cbag = &nodes[child].bag;
                    let len = cbag.len();
                    let p = cbag.binary_search(&vertex).unwrap();
                    let nbrs: Vec<usize> = (0..len).filter(|&q| q != p && self.g.has_edge(vertex, cbag[q])).collect();
                    for (ci, &s) in ct.keys.iter().enumerate() {
                        let mut partial = vec![(s, 0u8)];
                        for &q in &nbrs {
                            let mut next = Vec::with_capacity(partial.len() * 2);
                            for &(t, mask) in &partial {
                                next.push((t, mask));
                                if let Some(u) = add_edge(t, len, p, q, self.q.shape) {
                                    next.push((u, mask | (1 << q)));
                                }
                            }
                            partial = next;
                        }
                        for (t, mask) in partial {
                            if let Some((u, gain)) = self.finalize(t, len, p, vertex) {
                                out.offer(u, ct.vals[ci] + gain, Back::Forget(ci as u32, mask));
                            }
                        }
                    }
                }
                NiceKind::Join { left, right } => {
                    let (ta, tb) = (&keep[left], &keep[right]);
                    let len = node.bag.len();
                    let membership =
                        |s: u64| -> u8 { (0..len).fold(0u8, |m, i| if get(s, i) != OUT { m | 1 << i } else { m }) };
                    let mut by_mask: HashMap<u8, Vec<usize>> = HashMap::new();
                    for (bi, &s) in tb.keys.iter().enumerate() {
                        by_mask.entry(membership(s)).or_default().push(bi);
                    }
                    for (ai, &sa) in ta.keys.iter().enumerate() {
                        let Some(cands) = by_mask.get(&membership(sa)) else { continue };
                        for &bi in cands {
                            if let Some(u) = join_states(sa, tb.keys[bi], len, self.q.shape) {
                                out.offer(u, ta.vals[ai] + tb.vals[bi], Back::Join(ai as u32, bi as u32));
                            }
                        }
                    }
                }
            }
            out.seal();
            debug_assert_eq!(keep.len(), id);
            keep.push(out);
        }
        let root = nodes.len() - 1;
        (keep, root)
    }

    /// Walks back-pointers from the root; returns used vertices and chosen edges.
    fn trace(&self, tables: &[Table], root: usize, idx: usize) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
        let nodes = &self.nice.nodes;
        let mut used = Vec::new();
        let mut edges = Vec::new();
        let mut stack = vec![(root, idx)];
        while let Some((id, i)) = stack.pop() {
            match (nodes[id].kind, tables[id].backs[i]) {
                (NiceKind::Leaf, _) => {}
                (NiceKind::Introduce { child, .. }, Back::Introduce(ci)) => stack.push((child, ci as usize)),
                (NiceKind::Forget { vertex, child }, Back::Forget(ci, mask)) => {
                    let cbag = &nodes[child].bag;
                    let p = cbag.binary_search(&vertex).unwrap();
                    if get(tables[child].keys[ci as usize], p) != OUT || mask != 0 {
                        used.push(vertex);
                    }
                    for (q, &u) in cbag.iter().enumerate() {
                        if mask >> q & 1 == 1 {
                            edges.push((vertex, u));
                        }
                    }
                    stack.push((child, ci as usize));
                }
                (NiceKind::Join { left, right }, Back::Join(a, b)) => {
                    stack.push((left, a as usize));
                    stack.push((right, b as usize));
                }
                _ => unreachable!("back-pointer does not match node kind"),
            }
        }
        (used, edges)
    }
}

/// Orders the vertices of a path or cycle given as an edge set.
fn sequence_from_edges(used: &[Vertex], edges: &[(Vertex, Vertex)], cyclic: bool) -> Vec<Vertex> {
    if used.len() <= 1 {
        return used.to_vec();
    }
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let start = if cyclic {
        *used.iter().min().unwrap()
    } else {
        let mut ends: Vec<Vertex> = adj.iter().filter(|(_, n)| n.len() == 1).map(|(&v, _)| v).collect();
        ends.sort_unstable();
        ends[0]
    };
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[&cur].iter().copied().filter(|&w| w != prev).min();
        match next {
            Some(w) if w != start && seq.len() < used.len() => {
                seq.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    seq
}

/// Runs a query on an explicit nice decomposition. `None` when nothing
/// satisfies the constraints.
pub fn solve_on(g: &Graph, nice: &NiceDecomposition, q: Query<'_>) -> Option<(i64, PathWitness)> {
    let solver = Solver { g, nice, q };
    let (tables, root) = solver.run();
    let rt = &tables[root];
    let idx = rt.keys.iter().position(|&s| closed(s))?;
    let (used, edges) = solver.trace(&tables, root, idx);
    let cyclic = q.shape == Shape::Cycle;
    let seq = sequence_from_edges(&used, &edges, cyclic);
    Some((rt.vals[idx], PathWitness { vertices: seq, cyclic }))
}

fn check_weights(g: &Graph, weights: Option<&[i64]>) -> Result<()> {
    if let Some(w) = weights {
        if w.len() != g.n() {
            return Err(Error::InvalidArgument(format!("{} weights for {} vertices", w.len(), g.n())));
        }
        if w.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument("weights must be non-negative".into()));
        }
    }
    Ok(())
}

/// Maximum total weight (vertex count by default) of a path, with a witness.
pub fn longest_path(g: &Graph, weights: Option<&[i64]>) -> Result<(i64, PathWitness)> {
    check_weights(g, weights)?;
    if g.n() == 0 {
        return Ok((0, PathWitness::path(Vec::new())));
    }
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    let q = Query { shape: Shape::Path, weights, spanning: false, ends: None };
    Ok(solve_on(g, &nice, q).expect("a single vertex is always a path"))
}

/// Maximum total weight of a cycle (length >= 3). Acyclic graphs give `(0, [])`.
pub fn longest_cycle(g: &Graph, weights: Option<&[i64]>) -> Result<(i64, PathWitness)> {
    check_weights(g, weights)?;
    if g.n() == 0 {
        return Ok((0, PathWitness::cycle(Vec::new())));
    }
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    let q = Query { shape: Shape::Cycle, weights, spanning: false, ends: None };
    Ok(solve_on(g, &nice, q).unwrap_or((0, PathWitness::cycle(Vec::new()))))
}

/// A Hamilton path from `x1` to `x2`, if one exists.
pub fn hamilton_path_between(g: &Graph, x1: Vertex, x2: Vertex) -> Result<Option<PathWitness>> {
    if x1 >= g.n() {
        return Err(Error::VertexOutOfRange(x1));
    }
    if x2 >= g.n() {
        return Err(Error::VertexOutOfRange(x2));
    }
    if x1 == x2 {
        return Err(Error::InvalidArgument("endpoints must differ".into()));
    }
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    let q = Query { shape: Shape::Path, weights: None, spanning: true, ends: Some((x1, x2)) };
    Ok(solve_on(g, &nice, q).map(|(_, mut w)| {
        if w.vertices.first() != Some(&x1) {
            w.vertices.reverse();
        }
        w
    }))
}

pub fn has_hamilton_path_between(g: &Graph, x1: Vertex, x2: Vertex) -> Result<bool> {
    Ok(hamilton_path_between(g, x1, x2)?.is_some())
}

/// A Hamilton cycle, if one exists.
pub fn hamilton_cycle(g: &Graph) -> Result<Option<PathWitness>> {
    if g.n() < 3 {
        return Ok(None);
    }
    let nice = nice_for_chordal(g, WIDTH_LIMIT)?;
    let q = Query { shape: Shape::Cycle, weights: None, spanning: true, ends: None };
    Ok(solve_on(g, &nice, q).map(|(_, w)| w))
}
