//! Clique trees of chordal graphs and their nice normalisation.

use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, EliminationOrder};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Tree decomposition whose bags are the maximal cliques of a chordal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
    pub width: usize,
}

impl CliqueTree {
    /// Checks edge coverage, vertex coverage, tree shape and the running
    /// intersection property.
    pub fn validate(&self, g: &Graph) -> bool {
        let nb = self.bags.len();
        if g.n() == 0 {
            return true;
        }
        if nb == 0 || self.edges.len() + 1 != nb {
            return false;
        }
        let mut tree = Graph::new(nb);
        for &(a, b) in &self.edges {
            if a >= nb || b >= nb || a == b || !tree.add_edge(a, b) {
                return false;
            }
        }
        if !tree.is_connected() {
            return false;
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    return false;
                }
                holders[v].push(i);
            }
        }
        for v in g.vertices() {
            if holders[v].is_empty() {
                return false;
            }
            // bags holding v must induce a connected subtree
            if tree.induced_subgraph(&holders[v]).component_count() != 1 {
                return false;
            }
        }
        g.edges().into_iter().all(|(u, v)| holders[u].iter().any(|&b| self.bags[b].binary_search(&v).is_ok()))
    }
}

/// Clique tree of a chordal graph; errors on non-chordal input.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let order = is_chordal(g).ok_or(Error::NotChordal)?;
    Ok(clique_tree_from_order(g, &order))
}

/// Builds the clique tree from an elimination order (earlier neighbours of each
/// vertex form a clique). Bag of `v` is `v` plus its earlier neighbours; its parent
/// is the bag of the latest earlier neighbour. Non-maximal bags are absorbed by
/// the child that extends them.
pub fn clique_tree_from_order(g: &Graph, order: &EliminationOrder) -> CliqueTree {
    let n = g.n();
    if n == 0 {
        return CliqueTree { bags: Vec::new(), edges: Vec::new(), width: 0 };
    }
    let pos = order.positions();
    let earlier: Vec<Vec<Vertex>> = (0..n).map(|v| order.earlier_neighbors(g, &pos, v)).collect();
    let parent: Vec<Option<Vertex>> = (0..n).map(|v| earlier[v].iter().copied().max_by_key(|&w| pos[w])).collect();

    // absorbed_by[p] = child whose bag strictly extends bag(p)
    let mut absorbed_by: Vec<Option<Vertex>> = vec![None; n];
    for &v in &order.order {
        if let Some(p) = parent[v] {
            if absorbed_by[p].is_none() && earlier[v].len() == earlier[p].len() + 1 {
                absorbed_by[p] = Some(v);
            }
        }
    }
    // representative of each vertex's bag: follow absorption downwards (later in order)
    let mut rep = vec![usize::MAX; n];
    for &v in order.order.iter().rev() {
        rep[v] = match absorbed_by[v] {
            Some(c) => rep[c],
            None => v,
        };
    }
    let mut node_of = vec![usize::MAX; n];
    let mut bags = Vec::new();
    for &v in &order.order {
        if absorbed_by[v].is_none() {
            node_of[v] = bags.len();
            let mut bag = earlier[v].clone();
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
    }
    let mut edges = Vec::new();
    let mut first_root: Option<usize> = None;
    for &v in &order.order {
        if absorbed_by[v].is_some() {
            continue;
        }
        let me = node_of[v];
        // climb the chain of bags this one absorbed
        let mut top = v;
        while let Some(p) = parent[top] {
            if absorbed_by[p] == Some(top) {
                top = p;
            } else {
                break;
            }
        }
        match parent[top] {
            Some(p) => edges.push((node_of[rep[p]], me)),
            None => match first_root {
                // a new connected component; hang it anywhere
                Some(r) => edges.push((r, me)),
                None => first_root = Some(me),
            },
        }
    }
    let width = bags.iter().map(Vec::len).max().unwrap_or(1) - 1;
    CliqueTree { bags, edges, width }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce { vertex: Vertex, child: usize },
    Forget { vertex: Vertex, child: usize },
    Join { left: usize, right: usize },
}

#[derive(Debug, Clone)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag contents.
    pub bag: Vec<Vertex>,
}

/// Nice tree decomposition: children always precede their parent in `nodes`, the
/// last node is the root and has an empty bag.
#[derive(Debug, Clone)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
    pub width: usize,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: Vec<Vertex>) -> usize {
        self.nodes.push(NiceNode { kind, bag });
        self.nodes.len() - 1
    }

    /// Forgets `from \ to`, then introduces `to \ from`, starting at node `at`.
    fn morph(&mut self, mut at: usize, to: &[Vertex]) -> usize {
        let from = self.nodes[at].bag.clone();
        let mut bag = from.clone();
        for &v in &from {
            if to.binary_search(&v).is_err() {
                bag.retain(|&w| w != v);
                at = self.push(NiceKind::Forget { vertex: v, child: at }, bag.clone());
            }
        }
        for &v in to {
            if from.binary_search(&v).is_err() {
                let pos = bag.binary_search(&v).unwrap_err();
                bag.insert(pos, v);
                at = self.push(NiceKind::Introduce { vertex: v, child: at }, bag.clone());
            }
        }
        at
    }
}

/// Normalises a clique tree into introduce/forget/join form, rooted at bag 0.
/// Iterative, so path-like trees with thousands of bags are fine.
pub fn nice_decomposition(tree: &CliqueTree) -> NiceDecomposition {
    let nb = tree.bags.len();
    let mut b = Builder { nodes: Vec::new() };
    if nb == 0 {
        b.push(NiceKind::Leaf, Vec::new());
        return NiceDecomposition { nodes: b.nodes, width: 0 };
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &(a, c) in &tree.edges {
        adj[a].push(c);
        adj[c].push(a);
    }
    // parent pointers and a pre-order from bag 0
    let mut parent = vec![usize::MAX; nb];
    let mut preorder = Vec::with_capacity(nb);
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(t) = stack.pop() {
        preorder.push(t);
        for &c in &adj[t] {
            if parent[c] == usize::MAX {
                parent[c] = t;
                stack.push(c);
            }
        }
    }
    // top[t] = nice node whose bag equals bag t, covering t's subtree
    let mut top = vec![usize::MAX; nb];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &t in preorder.iter().skip(1) {
        children[parent[t]].push(t);
    }
    for &t in preorder.iter().rev() {
        let bag = &tree.bags[t];
        let mut acc: Option<usize> = None;
        for &c in &children[t] {
            let lifted = b.morph(top[c], bag);
            acc = Some(match acc {
                None => lifted,
                Some(prev) => b.push(NiceKind::Join { left: prev, right: lifted }, bag.clone()),
            });
        }
        top[t] = match acc {
            Some(node) => node,
            None => {
                let leaf = b.push(NiceKind::Leaf, Vec::new());
                b.morph(leaf, bag)
            }
        };
    }
    b.morph(top[0], &[]);
    NiceDecomposition { nodes: b.nodes, width: tree.width }
}

/// Clique tree plus nice form, with the width guard applied.
pub fn nice_for_chordal(g: &Graph, width_limit: usize) -> Result<NiceDecomposition> {
    let tree = clique_tree(g)?;
    if tree.width > width_limit {
        return Err(Error::WidthGuard { width: tree.width, limit: width_limit });
    }
    Ok(nice_decomposition(&tree))
}
