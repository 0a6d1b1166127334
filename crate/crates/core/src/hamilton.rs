//! Constructive Hamiltonicity for tough k-trees: twigs, squeezes, path
//! extension, theta-spanners, Hamilton cycles and Hamilton paths.
//!
//! The constructors peel buds off an explicit stack until a small base case
//! remains, solve that by search, then replay the stack in reverse. Toughness
//! is never recomputed; when a step the toughness hypothesis guarantees is
//! missing (no usable twig, a bud that is not a squeeze, no local path) the
//! constructor fails with `Error::Precondition`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ktree::recognize_ktree;
use crate::twdp::PathWitness;

/// A non-universal vertex `v` whose degree-k neighbours form the bud and whose
/// other neighbours form a k-clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Twig {
    pub v: Vertex,
    pub bud: Vec<Vertex>,
    pub rest: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Squeeze {
    pub v: Vertex,
    pub s: Vec<Vertex>,
    pub r: Vec<Vertex>,
}

impl Squeeze {
    pub fn new(g: &Graph, v: Vertex, s: &[Vertex]) -> Option<Squeeze> {
        if v >= g.n() || s.iter().any(|&x| !g.has_edge(v, x)) {
            return None;
        }
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        let r: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|x| !s.contains(x)).collect();
        squeeze_conditions(g, &s, &r).then_some(Squeeze { v, s, r })
    }
}

fn squeeze_conditions(g: &Graph, s: &[Vertex], r: &[Vertex]) -> bool {
    let hits = |x: Vertex, set: &[Vertex]| set.iter().filter(|&&y| g.has_edge(x, y)).count();
    (1..=2).contains(&s.len())
        && r.len() >= 2
        && s.iter().all(|&x| hits(x, r) + 1 >= r.len())
        && r.iter().all(|&x| hits(x, s) + 1 >= s.len())
}

/// The two squeeze conditions for `S` and `R = N(v) \ S`.
pub fn is_squeeze(g: &Graph, v: Vertex, s: &[Vertex]) -> bool {
    Squeeze::new(g, v, s).is_some()
}

/// Three paths between `x1` and `x2`, disjoint apart from their ends, each with
/// an interior vertex. Every path runs from `x1` to `x2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpanner {
    pub x1: Vertex,
    pub x2: Vertex,
    pub paths: [Vec<Vertex>; 3],
}

impl ThetaSpanner {
    /// Adjacency, ends, interiors present and pairwise disjoint, and every
    /// vertex of `g` covered.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.x1 == self.x2 || self.x1 >= g.n() || self.x2 >= g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        seen[self.x1] = true;
        seen[self.x2] = true;
        for p in &self.paths {
            if p.len() < 3 || p[0] != self.x1 || p[p.len() - 1] != self.x2 {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &p[1..p.len() - 1] {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// The current graph while buds are peeled off.
struct Peel<'a> {
    g: &'a Graph,
    k: usize,
    alive: Vec<bool>,
    deg: Vec<usize>,
    count: usize,
}

impl<'a> Peel<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Peel { g, k, alive: vec![true; g.n()], deg: g.vertices().map(|v| g.degree(v)).collect(), count: g.n() }
    }

    fn remove(&mut self, v: Vertex) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.count -= 1;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    fn twig(&self, v: Vertex) -> Option<Twig> {
        if !self.alive[v] || self.deg[v] + 1 >= self.count {
            return None;
        }
        let (bud, rest): (Vec<Vertex>, Vec<Vertex>) =
            self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w]).partition(|&w| self.deg[w] == self.k);
        (!bud.is_empty() && rest.len() == self.k && self.g.is_clique(&rest)).then_some(Twig { v, bud, rest })
    }

    fn twigs(&self) -> impl Iterator<Item = Twig> + '_ {
        (0..self.g.n()).filter_map(|v| self.twig(v))
    }

    fn live(&self) -> Vec<Vertex> {
        (0..self.g.n()).filter(|&v| self.alive[v]).collect()
    }

    fn squeeze_or_fail(&self, t: &Twig) -> Result<()> {
        if self.k >= 2 && !squeeze_conditions(self.g, &t.bud, &t.rest) {
            return Err(violated(format!("bud of twig {} is not a squeeze", t.v)));
        }
        Ok(())
    }
}

fn violated(what: String) -> Error {
    Error::Precondition(format!("toughness precondition violated: {what}"))
}

/// All twigs of a k-tree, by vertex id.
pub fn find_twigs(g: &Graph, k: usize) -> Result<Vec<Twig>> {
    require_ktree(g, k)?;
    Ok(Peel::new(g, k).twigs().collect())
}

fn require_ktree(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || recognize_ktree(g, k).is_none() {
        return Err(Error::NotKTree { k });
    }
    Ok(())
}

/// Lexicographically least Hamilton path of `{u, v, w} ∪ S` from `u` to `w`.
fn local_path(g: &Graph, u: Vertex, v: Vertex, w: Vertex, s: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut mid: Vec<Vertex> = s.to_vec();
    mid.push(v);
    mid.sort_unstable();
    let mut best = None;
    permute(&mut mid, 0, &mut |p| {
        let mut seq = Vec::with_capacity(p.len() + 2);
        seq.push(u);
        seq.extend_from_slice(p);
        seq.push(w);
        if seq.windows(2).all(|e| g.has_edge(e[0], e[1])) && best.as_ref().is_none_or(|b: &Vec<Vertex>| seq < *b) {
            best = Some(seq);
        }
    });
    best
}

fn permute(xs: &mut [Vertex], i: usize, f: &mut impl FnMut(&[Vertex])) {
    if i == xs.len() {
        f(xs);
        return;
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        permute(xs, i + 1, f);
        xs.swap(i, j);
    }
}

/// Replaces `v` (interior, at `pos`) by a local Hamilton path through `S`.
fn splice(g: &Graph, path: &mut Vec<Vertex>, pos: usize, s: &[Vertex]) -> Result<()> {
    let (u, v, w) = (path[pos - 1], path[pos], path[pos + 1]);
    let local =
        local_path(g, u, v, w, s).ok_or_else(|| violated(format!("no local path through the squeeze at {v}")))?;
    path.splice(pos - 1..=pos + 1, local);
    Ok(())
}

/// Extends a path in `g - S` through the squeeze `S` by the interior vertex `v`,
/// keeping its ends.
pub fn extend_path_with_squeeze(g: &Graph, path: &PathWitness, v: Vertex, s: &[Vertex]) -> Result<PathWitness> {
    if path.cyclic {
        return Err(Error::Precondition("expected an open path".into()));
    }
    let seq = &path.vertices;
    let pos = seq
        .iter()
        .position(|&x| x == v)
        .filter(|&p| p > 0 && p + 1 < seq.len())
        .ok_or_else(|| Error::Precondition(format!("{v} is not an interior vertex of the path")))?;
    if s.iter().any(|x| seq.contains(x)) {
        return Err(Error::Precondition("squeeze meets the path".into()));
    }
    if !path.is_valid_in(g) {
        return Err(Error::Precondition("not a path of the graph".into()));
    }
    if !is_squeeze(g, v, s) {
        return Err(Error::Precondition(format!("not a squeeze by {v}")));
    }
    let mut out = seq.clone();
    splice(g, &mut out, pos, s)?;
    Ok(PathWitness::path(out))
}

/// The lowest pair of non-adjacent twigs with disjoint buds.
pub fn find_two_nonadjacent_twigs(g: &Graph, k: usize) -> Result<Option<(Twig, Twig)>> {
    require_ktree(g, k)?;
    if g.n() < k + 4 {
        return Err(Error::Precondition(format!("needs at least {} vertices", k + 4)));
    }
    let twigs: Vec<Twig> = Peel::new(g, k).twigs().collect();
    for (i, a) in twigs.iter().enumerate() {
        for b in &twigs[i + 1..] {
            if !g.has_edge(a.v, b.v) && a.bud.iter().all(|x| !b.bud.contains(x)) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// Small-case search: lexicographically least Hamilton path of the live set
/// from `a`, ending at `b` or, with `b = None`, next to `a`.
fn search_path(g: &Graph, live: &[Vertex], a: Vertex, b: Option<Vertex>) -> Option<Vec<Vertex>> {
    fn go(g: &Graph, live: &[Vertex], used: &mut Vec<bool>, seq: &mut Vec<Vertex>, b: Option<Vertex>) -> bool {
        let last = *seq.last().unwrap();
        if seq.len() == live.len() {
            return match b {
                Some(b) => last == b,
                None => seq.len() < 3 || g.has_edge(last, seq[0]),
            };
        }
        if Some(last) == b {
            return false;
        }
        for (i, &x) in live.iter().enumerate() {
            if !used[i] && g.has_edge(last, x) {
                used[i] = true;
                seq.push(x);
                if go(g, live, used, seq, b) {
                    return true;
                }
                seq.pop();
                used[i] = false;
            }
        }
        false
    }
    let mut used: Vec<bool> = live.iter().map(|&x| x == a).collect();
    let mut seq = vec![a];
    go(g, live, &mut used, &mut seq, b).then_some(seq)
}

/// Small-case search for a theta-spanner, first interiors increasing.
fn search_theta(g: &Graph, live: &[Vertex], x1: Vertex, x2: Vertex) -> Option<[Vec<Vertex>; 3]> {
    struct S<'a> {
        g: &'a Graph,
        inner: Vec<Vertex>,
        used: Vec<bool>,
        x1: Vertex,
        x2: Vertex,
        done: Vec<Vec<Vertex>>,
    }
    fn grow(s: &mut S, cur: &mut Vec<Vertex>) -> bool {
        let last = *cur.last().unwrap();
        if cur.len() >= 2 && s.g.has_edge(last, s.x2) {
            cur.push(s.x2);
            s.done.push(cur.clone());
            let ok = if s.done.len() == 3 { s.used.iter().all(|&u| u) } else { start(s) };
            if ok {
                return true;
            }
            s.done.pop();
            cur.pop();
        }
        for i in 0..s.inner.len() {
            let x = s.inner[i];
            if !s.used[i] && s.g.has_edge(last, x) {
                s.used[i] = true;
                cur.push(x);
                if grow(s, cur) {
                    return true;
                }
                cur.pop();
                s.used[i] = false;
            }
        }
        false
    }
    fn start(s: &mut S) -> bool {
        let floor = s.done.last().map(|p| p[1]);
        for i in 0..s.inner.len() {
            let x = s.inner[i];
            if !s.used[i] && floor.is_none_or(|f| x > f) && s.g.has_edge(s.x1, x) {
                s.used[i] = true;
                if grow(s, &mut vec![s.x1, x]) {
                    return true;
                }
                s.used[i] = false;
            }
        }
        false
    }
    let inner: Vec<Vertex> = live.iter().copied().filter(|&v| v != x1 && v != x2).collect();
    let mut s = S { g, used: vec![false; inner.len()], inner, x1, x2, done: Vec::new() };
    if start(&mut s) {
        let mut it = s.done.into_iter();
        Some([it.next()?, it.next()?, it.next()?])
    } else {
        None
    }
}

const SEARCH_LIMIT: usize = 24;

fn base_guard(k: usize) -> Result<()> {
    if k + 3 > SEARCH_LIMIT {
        return Err(Error::SizeGuard { n: k + 3, limit: SEARCH_LIMIT });
    }
    Ok(())
}

/// A Hamilton cycle of a k-tree of toughness above `k/3`.
pub fn hamilton_cycle(g: &Graph, k: usize) -> Result<PathWitness> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    require_ktree(g, k)?;
    if g.n() < 3 {
        return Err(Error::Precondition("a graph on fewer than 3 vertices has no Hamilton cycle".into()));
    }
    base_guard(k)?;
    let mut w = Peel::new(g, k);
    let mut stack = Vec::new();
    while w.count > k + 2 {
        let t = w.twigs().next().ok_or_else(|| violated(format!("no twig on {} vertices", w.count)))?;
        w.squeeze_or_fail(&t)?;
        for &s in &t.bud {
            w.remove(s);
        }
        stack.push(t);
    }
    let live = w.live();
    let mut cycle =
        search_path(g, &live, live[0], None).ok_or_else(|| violated("base case has no Hamilton cycle".into()))?;
    while let Some(t) = stack.pop() {
        let pos = cycle.iter().position(|&x| x == t.v).unwrap();
        // put v second so it is interior to the open sequence
        let len = cycle.len();
        cycle.rotate_left((pos + len - 1) % len);
        splice(g, &mut cycle, 1, &t.bud)?;
    }
    Ok(PathWitness::cycle(cycle))
}

enum ThetaStep {
    Squeeze(Twig),
    /// `end` of the spanner moved from `orig` to the twig whose bud held it.
    Reroot {
        end: usize,
        twig: Twig,
        orig: Vertex,
    },
}

fn theta_core(w: &mut Peel, x1: Vertex, x2: Vertex) -> Result<[Vec<Vertex>; 3]> {
    let g = w.g;
    let k = w.k;
    let mut ends = [x1, x2];
    let mut stack = Vec::new();
    while w.count > k + 3 {
        let clear = w.twigs().find(|t| !t.bud.contains(&ends[0]) && !t.bud.contains(&ends[1]));
        if let Some(t) = clear {
            w.squeeze_or_fail(&t)?;
            for &s in &t.bud {
                w.remove(s);
            }
            stack.push(ThetaStep::Squeeze(t));
            continue;
        }
        let found = (0..2).find_map(|end| {
            w.twigs().find(|t| t.bud.contains(&ends[end]) && !t.bud.contains(&ends[1 - end])).map(|t| (end, t))
        });
        let Some((end, t)) = found else {
            return Err(violated(format!("no usable twig for a spanner between {} and {}", ends[0], ends[1])));
        };
        w.squeeze_or_fail(&t)?;
        for &s in &t.bud {
            w.remove(s);
        }
        let orig = ends[end];
        ends[end] = t.v;
        stack.push(ThetaStep::Reroot { end, twig: t, orig });
    }
    let live = w.live();
    let mut paths = search_theta(g, &live, ends[0], ends[1])
        .ok_or_else(|| violated(format!("no spanner between {} and {} in the base case", ends[0], ends[1])))?;
    while let Some(step) = stack.pop() {
        match step {
            ThetaStep::Squeeze(t) => {
                let (i, pos) = paths
                    .iter()
                    .enumerate()
                    .find_map(|(i, p)| p.iter().position(|&x| x == t.v).map(|pos| (i, pos)))
                    .unwrap();
                splice(g, &mut paths[i], pos, &t.bud)?;
            }
            ThetaStep::Reroot { end, twig, orig } => {
                if end == 1 {
                    paths.iter_mut().for_each(|p| p.reverse());
                }
                paths = reroot(g, paths, &twig, orig)?;
                if end == 1 {
                    paths.iter_mut().for_each(|p| p.reverse());
                }
            }
        }
    }
    Ok(paths)
}

/// Moves the first end of a spanner from `twig.v` to `orig`, a member of its bud.
fn reroot(g: &Graph, paths: [Vec<Vertex>; 3], twig: &Twig, orig: Vertex) -> Result<[Vec<Vertex>; 3]> {
    let y_idx = (0..3)
        .find(|&i| g.has_edge(orig, paths[i][1]))
        .ok_or_else(|| violated(format!("{orig} sees no neighbour of {} in the spanner", twig.v)))?;
    let others: Vec<usize> = (0..3).filter(|&i| i != y_idx).collect();
    let (a, b) = (others[0], others[1]);
    let mut local = vec![paths[a][1], twig.v, paths[b][1]];
    splice(g, &mut local, 1, &twig.bud)?;
    let cut = local.iter().position(|&x| x == orig).unwrap();
    let mut pa: Vec<Vertex> = local[..=cut].iter().rev().copied().collect();
    pa.extend_from_slice(&paths[a][2..]);
    let mut pb: Vec<Vertex> = local[cut..].to_vec();
    pb.extend_from_slice(&paths[b][2..]);
    let mut py = vec![orig];
    py.extend_from_slice(&paths[y_idx][1..]);
    let mut out = [Vec::new(), Vec::new(), Vec::new()];
    out[y_idx] = py;
    out[a] = pa;
    out[b] = pb;
    Ok(out)
}

/// A theta-spanner between two degree-k vertices of a tough k-tree (`k >= 3`,
/// not `K_4`).
pub fn theta_spanner(g: &Graph, k: usize, x1: Vertex, x2: Vertex) -> Result<ThetaSpanner> {
    if k < 3 {
        return Err(Error::InvalidArgument("k must be at least 3".into()));
    }
    for x in [x1, x2] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange(x));
        }
    }
    require_ktree(g, k)?;
    if x1 == x2 {
        return Err(Error::Precondition("the ends must differ".into()));
    }
    if k == 3 && g.n() == 4 {
        return Err(Error::Precondition("K_4 has no theta-spanner".into()));
    }
    for x in [x1, x2] {
        if g.degree(x) != k {
            return Err(Error::Precondition(format!("vertex {x} has degree {} instead of {k}", g.degree(x))));
        }
    }
    base_guard(k)?;
    let mut w = Peel::new(g, k);
    let paths = theta_core(&mut w, x1, x2)?;
    Ok(ThetaSpanner { x1, x2, paths })
}

enum PathStep {
    Squeeze(Twig),
    Append(Vertex),
    Prepend(Vertex),
}

/// Inserts each of `rest` between two consecutive neighbours, first fit with
/// backtracking.
fn insert_all(g: &Graph, seq: &mut Vec<Vertex>, rest: &[Vertex]) -> bool {
    let Some((&s, tail)) = rest.split_first() else { return true };
    for i in 0..seq.len() - 1 {
        if g.has_edge(s, seq[i]) && g.has_edge(s, seq[i + 1]) {
            seq.insert(i + 1, s);
            if insert_all(g, seq, tail) {
                return true;
            }
            seq.remove(i + 1);
        }
    }
    false
}

/// Joins the three spanner paths through both buds into a Hamilton path.
fn join_spanner(g: &Graph, paths: &[Vec<Vertex>; 3], x1: Vertex, x2: Vertex, buds: &[Vertex]) -> Result<Vec<Vertex>> {
    let inner: Vec<&[Vertex]> = paths.iter().map(|p| &p[1..p.len() - 1]).collect();
    for [a, b, c] in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let mut seq = vec![x1];
        seq.extend_from_slice(inner[a]);
        seq.extend(inner[b].iter().rev());
        seq.extend_from_slice(inner[c]);
        seq.push(x2);
        if seq.windows(2).any(|e| !g.has_edge(e[0], e[1])) {
            continue;
        }
        if insert_all(g, &mut seq, buds) {
            return Ok(seq);
        }
    }
    Err(violated(format!("cannot join the spanner between {x1} and {x2} through the buds")))
}

/// A Hamilton path from `x1` to `x2` in a k-tree (`k >= 3`) of toughness above
/// `k/3`.
pub fn hamilton_path_between(g: &Graph, k: usize, x1: Vertex, x2: Vertex) -> Result<PathWitness> {
    if k < 3 {
        return Err(Error::InvalidArgument("k must be at least 3".into()));
    }
    for x in [x1, x2] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange(x));
        }
    }
    if x1 == x2 {
        return Err(Error::Precondition("the ends must differ".into()));
    }
    require_ktree(g, k)?;
    base_guard(k)?;
    let mut w = Peel::new(g, k);
    let (mut a, mut b) = (x1, x2);
    let mut stack = Vec::new();
    let mut path = loop {
        if w.count <= k + 3 {
            let live = w.live();
            break search_path(g, &live, a, Some(b))
                .ok_or_else(|| violated(format!("base case has no Hamilton path from {a} to {b}")))?;
        }
        let away_from_a = w.twigs().find(|t| t.v != a && t.v != b && !t.bud.contains(&a));
        if let Some(t) = away_from_a {
            if t.bud.contains(&b) {
                w.remove(b);
                stack.push(PathStep::Append(b));
                b = t.v;
            } else {
                w.squeeze_or_fail(&t)?;
                for &s in &t.bud {
                    w.remove(s);
                }
                stack.push(PathStep::Squeeze(t));
            }
            continue;
        }
        let away_from_b = w.twigs().find(|t| t.v != a && t.v != b && !t.bud.contains(&b));
        if let Some(t) = away_from_b {
            w.remove(a);
            stack.push(PathStep::Prepend(a));
            a = t.v;
            continue;
        }
        let (Some(t1), Some(t2)) = (w.twig(a), w.twig(b)) else {
            return Err(violated(format!("twigs all lie in buds of both {a} and {b}")));
        };
        if g.has_edge(a, b) || t1.bud.iter().any(|x| t2.bud.contains(x)) {
            return Err(violated(format!("the twigs {a} and {b} are adjacent or share a bud vertex")));
        }
        let mut buds = t1.bud.clone();
        buds.extend_from_slice(&t2.bud);
        for &s in &buds {
            w.remove(s);
        }
        let paths = theta_core(&mut w, a, b)?;
        break join_spanner(g, &paths, a, b, &buds)?;
    };
    while let Some(step) = stack.pop() {
        match step {
            PathStep::Append(x) => path.push(x),
            PathStep::Prepend(x) => path.insert(0, x),
            PathStep::Squeeze(t) => {
                let pos = path.iter().position(|&x| x == t.v).unwrap();
                splice(g, &mut path, pos, &t.bud)?;
            }
        }
    }
    Ok(PathWitness::path(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::basic_3twig;

    #[test]
    fn twigs_of_basic_3twig() {
        let b = basic_3twig(3).unwrap();
        let twigs = find_twigs(&b, 3).unwrap();
        assert_eq!(twigs.iter().map(|t| t.v).collect::<Vec<_>>(), vec![0, 1, 2]);
        for t in &twigs {
            assert_eq!(b.degree(t.v), 5);
            assert_eq!(t.bud.len(), 2);
            assert!(t.bud.iter().all(|&s| b.label(s) == Some("white")));
            assert!(is_squeeze(&b, t.v, &t.bud));
        }
        assert_eq!(find_two_nonadjacent_twigs(&b, 3).unwrap(), None);
        assert!(find_twigs(&Graph::complete(3), 3).unwrap().is_empty());
    }

    #[test]
    fn squeeze_edge_cases() {
        let g = Graph::complete(4);
        assert!(!is_squeeze(&g, 0, &[1, 2]));
        assert!(!is_squeeze(&g, 0, &[1, 2, 3]));
        assert!(is_squeeze(&g, 0, &[1]));
    }

    #[test]
    fn extend_requires_interior() {
        let g = Graph::complete(4);
        let p = PathWitness::path(vec![0, 1, 2]);
        assert!(extend_path_with_squeeze(&g, &p, 0, &[3]).is_err());
        let q = extend_path_with_squeeze(&g, &p, 1, &[3]).unwrap();
        assert_eq!(q.vertices, vec![0, 1, 3, 2]);
    }

    #[test]
    fn constructors_on_basic_3twig() {
        let b = basic_3twig(3).unwrap();
        let c = hamilton_cycle(&b, 3).unwrap();
        assert!(c.is_hamiltonian_in(&b));
        for x in 0..7 {
            for y in 0..7 {
                if x != y {
                    let p = hamilton_path_between(&b, 3, x, y).unwrap();
                    assert!(p.is_hamiltonian_in(&b));
                    assert_eq!((p.vertices[0], p.vertices[6]), (x, y));
                }
            }
        }
        let s = theta_spanner(&b, 3, 4, 5).unwrap();
        assert!(s.is_valid_in(&b));
        assert!(theta_spanner(&Graph::complete(4), 3, 0, 1).is_err());
    }
}
