//! Undirected simple graphs over dense vertex ids.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::GraphJson;

/// Vertex ids are `0..n`.
pub type Vertex = usize;

/// Undirected simple graph stored as sorted adjacency lists, with optional
/// per-vertex tags ("white", "u17", ...).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], labels: BTreeMap::new() }
    }

    /// Builds a graph from an edge list. Loops and out-of-range ids are rejected;
    /// duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        Ok(self.insert_edge(u, v))
    }

    /// Adds the edge `uv`; panics on loops or bad ids. Returns false if it was present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge {u}-{v} out of range");
        self.insert_edge(u, v)
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: Vertex, tag: impl Into<String>) {
        self.labels.insert(v, tag.into());
    }

    pub fn clear_label(&mut self, v: Vertex) {
        self.labels.remove(&v);
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Vertices carrying exactly this tag, ascending.
    pub fn vertices_labeled(&self, tag: &str) -> Vec<Vertex> {
        self.labels.iter().filter(|(_, t)| t.as_str() == tag).map(|(&v, _)| v).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.len() + 1 == n)
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_simplicial(&self, v: Vertex) -> bool {
        self.is_clique(&self.adj[v])
    }

    /// Subgraph induced by `keep` (any order); vertex `keep[i]` becomes `i`.
    /// Labels travel with their vertices.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            let mut row: Vec<Vertex> =
                self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect();
            row.sort_unstable();
            g.adj[i] = row;
            if let Some(t) = self.labels.get(&v) {
                g.labels.insert(i, t.clone());
            }
        }
        g
    }

    /// Removes a vertex set, relabelling the survivors in ascending order.
    /// Returns the new graph and the survivors' original ids.
    pub fn remove_vertices(&self, gone: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut dead = vec![false; self.n()];
        for &v in gone {
            dead[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !dead[v]).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Component id per vertex (`usize::MAX` for masked-out vertices) and the
    /// number of components among vertices where `alive` is true.
    pub fn components_masked(&self, alive: &[bool]) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if !alive[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if alive[w] && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components_masked(&vec![true; self.n()]).1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Number of components of `G - removed`.
    pub fn components_without(&self, removed: &[Vertex]) -> usize {
        let mut alive = vec![true; self.n()];
        for &v in removed {
            alive[v] = false;
        }
        self.components_masked(&alive).1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// BFS distances from `s` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.clone();
        for row in &other.adj {
            g.adj.push(row.iter().map(|&w| w + shift).collect());
        }
        for (&v, t) in &other.labels {
            g.labels.insert(v + shift, t.clone());
        }
        g
    }

    /// Checks simplicity and symmetry. Always true for graphs built through the
    /// public API; used on deserialized input.
    pub fn validate(&self) -> Result<()> {
        for (u, row) in self.adj.iter().enumerate() {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidGraph(format!("adjacency of {u} not strictly sorted")));
                }
            }
            for &v in row {
                if v >= self.n() {
                    return Err(Error::VertexOutOfRange(v));
                }
                if v == u {
                    return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidGraph(format!("edge {u}-{v} not symmetric")));
                }
            }
        }
        for &v in self.labels.keys() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        Ok(())
    }
}

/// Checks that `seq` is a path in `g` (consecutive vertices adjacent, no repeats).
pub fn is_path(g: &Graph, seq: &[Vertex]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Checks that `seq` is a cycle in `g` (a path of length >= 3 whose ends are adjacent).
pub fn is_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    seq.len() >= 3 && is_path(g, seq) && g.has_edge(seq[0], seq[seq.len() - 1])
}
