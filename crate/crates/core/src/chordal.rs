//! Chordality via maximum cardinality search, with an independent check of the
//! resulting elimination order.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// A vertex ordering `(v_1, ..., v_n)` in which every `v_i` is simplicial in the
/// subgraph induced by `{v_1, ..., v_i}`; equivalently, the neighbours of `v_i`
/// that come earlier in the order form a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    pub order: Vec<Vertex>,
}

impl EliminationOrder {
    /// Position of every vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Neighbours of `v` that precede it in the order.
    pub fn earlier_neighbors(&self, g: &Graph, pos: &[usize], v: Vertex) -> Vec<Vertex> {
        g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect()
    }
}

/// Maximum cardinality search: repeatedly visit an unvisited vertex with the most
/// visited neighbours (lowest id on ties). Bucket queue, O(n + m).
pub fn maximum_cardinality_search(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    // buckets[w] holds candidates with weight w; stale entries are skipped lazily
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n.max(1)];
    buckets[0] = (0..n).rev().collect();
    let mut high = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[high].pop() {
                Some(v) if !visited[v] && weight[v] == high => break v,
                Some(_) => continue,
                None => high -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                if weight[w] > high {
                    high = weight[w];
                }
            }
        }
    }
    order
}

/// True iff `order` is a permutation of the vertices and each vertex's earlier
/// neighbours form a clique. Uses the parent test: with `p` the latest earlier
/// neighbour of `v`, the other earlier neighbours of `v` must be adjacent to `p`.
pub fn is_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let earlier: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) else {
            continue;
        };
        if earlier.iter().any(|&w| w != parent && !g.has_edge(w, parent)) {
            return false;
        }
    }
    true
}

/// Returns an elimination order iff `g` is chordal.
pub fn is_chordal(g: &Graph) -> Option<EliminationOrder> {
    let order = maximum_cardinality_search(g);
    is_elimination_order(g, &order).then_some(EliminationOrder { order })
}

/// Vertices whose neighbourhood induces a complete graph, ascending.
pub fn simplicial_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.is_simplicial(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every cycle of length >= 4 has a chord; checked over all vertex sequences.
    fn chordal_by_cycles(g: &Graph) -> bool {
        fn extend(g: &Graph, path: &mut Vec<Vertex>, used: &mut Vec<bool>) -> bool {
            let last = *path.last().unwrap();
            let first = path[0];
            if path.len() >= 4 && g.has_edge(last, first) {
                // chordless iff no pair of non-consecutive cycle vertices is adjacent
                let k = path.len();
                let mut chord = false;
                for i in 0..k {
                    for j in i + 2..k {
                        if i == 0 && j == k - 1 {
                            continue;
                        }
                        if g.has_edge(path[i], path[j]) {
                            chord = true;
                        }
                    }
                }
                if !chord {
                    return false;
                }
            }
            for &w in g.neighbors(last) {
                if !used[w] && w > first {
                    used[w] = true;
                    path.push(w);
                    let ok = extend(g, path, used);
                    path.pop();
                    used[w] = false;
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
        for s in g.vertices() {
            let mut used = vec![false; g.n()];
            used[s] = true;
            if !extend(g, &mut vec![s], &mut used) {
                return false;
            }
        }
        true
    }

    fn square_of_path(n: usize) -> Graph {
        let mut g = Graph::path(n);
        for v in 2..n {
            g.add_edge(v - 2, v);
        }
        g
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(is_chordal(&Graph::cycle(4)).is_none());
        assert!(!chordal_by_cycles(&Graph::cycle(4)));
    }

    #[test]
    fn complete_graph_is_chordal() {
        let g = Graph::complete(4);
        let order = is_chordal(&g).unwrap();
        assert!(is_elimination_order(&g, &order.order));
    }

    #[test]
    fn square_of_p5_is_chordal() {
        let g = square_of_path(5);
        assert!(chordal_by_cycles(&g));
        assert!(is_chordal(&g).is_some());
    }

    #[test]
    fn rejects_bad_orders() {
        let g = Graph::cycle(4);
        assert!(!is_elimination_order(&g, &[0, 1, 2, 3]));
        assert!(!is_elimination_order(&g, &[0, 1, 2]));
        assert!(!is_elimination_order(&g, &[0, 0, 1, 2]));
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(simplicial_vertices(&Graph::path(3)), vec![0, 2]);
        assert_eq!(simplicial_vertices(&Graph::complete(5)), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn mcs_agrees_with_cycle_oracle_on_small_graphs() {
        // all graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(is_chordal(&g).is_some(), chordal_by_cycles(&g), "{edges:?}");
        }
    }
}
