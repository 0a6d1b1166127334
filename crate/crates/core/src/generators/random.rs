//! Seeded random instances for property suites.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::ktree::{BuildStep, KTreeCertificate};
use crate::twdp::toughness_exact;

/// Random k-tree on `n >= k` vertices: each new vertex joins a uniformly chosen
/// existing k-clique. Returns the graph with its build certificate.
pub fn random_ktree<R: Rng>(k: usize, n: usize, rng: &mut R) -> (Graph, KTreeCertificate) {
    assert!(k >= 1 && n >= k, "need n >= k >= 1");
    let mut g = Graph::complete(k);
    let mut cliques: Vec<Vec<Vertex>> = vec![(0..k).collect()];
    let mut steps = Vec::with_capacity(n - k);
    for _ in k..n {
        let clique = cliques.choose(rng).unwrap().clone();
        let v = g.add_vertex();
        for &w in &clique {
            g.add_edge(v, w);
        }
        for skip in 0..k {
            let mut c: Vec<Vertex> =
                clique.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, w)| w).collect();
            c.push(v);
            cliques.push(c);
        }
        steps.push(BuildStep { vertex: v, clique });
    }
    let cert = KTreeCertificate { k, base: (0..k).collect(), build_order: steps };
    (g, cert)
}

/// Random k-tree whose toughness stays above `num/den`: each step tries the
/// k-cliques in random order and keeps the first addition that stays tough.
/// Adding a simplicial vertex never raises toughness, so a dead end stops the
/// growth early; the result may have fewer than `n` vertices.
pub fn random_tough_ktree<R: Rng>(
    k: usize,
    n: usize,
    num: u64,
    den: u64,
    rng: &mut R,
) -> Result<(Graph, KTreeCertificate)> {
    assert!(k >= 1 && n >= k, "need n >= k >= 1");
    let mut g = Graph::complete(k);
    let mut cliques: Vec<Vec<Vertex>> = vec![(0..k).collect()];
    let mut steps = Vec::with_capacity(n - k);
    'grow: for _ in k..n {
        let mut order: Vec<usize> = (0..cliques.len()).collect();
        order.shuffle(rng);
        for ci in order {
            let clique = cliques[ci].clone();
            let mut h = g.clone();
            let v = h.add_vertex();
            for &w in &clique {
                h.add_edge(v, w);
            }
            if !toughness_exact(&h)?.value.exceeds(num, den) {
                continue;
            }
            g = h;
            for skip in 0..k {
                let mut c: Vec<Vertex> =
                    clique.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, w)| w).collect();
                c.push(v);
                cliques.push(c);
            }
            steps.push(BuildStep { vertex: v, clique });
            continue 'grow;
        }
        break;
    }
    let cert = KTreeCertificate { k, base: (0..k).collect(), build_order: steps };
    Ok((g, cert))
}

/// Random tree on `n` vertices with maximum degree at most `max_degree`
/// (at least 2): each new vertex hangs off a random vertex with spare degree.
pub fn random_tree<R: Rng>(n: usize, max_degree: usize, rng: &mut R) -> Graph {
    assert!(max_degree >= 2 || n <= 2, "max degree must be at least 2");
    let mut g = Graph::new(n.min(1));
    for _ in 1..n {
        let open: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) < max_degree).collect();
        let p = *open.choose(rng).unwrap();
        let v = g.add_vertex();
        g.add_edge(p, v);
    }
    g
}

/// Random connected chordal graph: starting from `K_min`, each new vertex joins
/// a random sub-clique (of size at least `min_attach`) of a random maximal clique.
/// With `min_attach >= 2` the result is 2-connected.
pub fn random_chordal<R: Rng>(n: usize, min_attach: usize, rng: &mut R) -> Graph {
    let base = min_attach.max(1).min(n);
    let mut g = Graph::complete(base);
    let mut bags: Vec<Vec<Vertex>> = vec![(0..base).collect()];
    for _ in base..n {
        let bi = rng.random_range(0..bags.len());
        let bag = bags[bi].clone();
        let size = rng.random_range(min_attach.max(1).min(bag.len())..=bag.len());
        let mut attach = bag.clone();
        while attach.len() > size {
            let i = rng.random_range(0..attach.len());
            attach.swap_remove(i);
        }
        attach.sort_unstable();
        let v = g.add_vertex();
        for &w in &attach {
            g.add_edge(v, w);
        }
        let mut new_bag = attach.clone();
        new_bag.push(v);
        if attach.len() == bag.len() {
            bags[bi] = new_bag;
        } else {
            bags.push(new_bag);
        }
    }
    g
}
