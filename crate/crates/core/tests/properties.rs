use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toughtree::chordal::is_chordal;
use toughtree::generators::{random_chordal, random_ktree, random_tough_ktree, random_tree, square};
use toughtree::io::{from_json, to_json};
use toughtree::ktree::recognize_ktree;
use toughtree::oracles::{bf_toughness, enumerate_tough_ktrees};
use toughtree::structure::{
    classify_tough_chordal_planar, is_planar_3tree, is_planar_3tree_by_search, ktree_by_characterization,
    ChordalPlanarClass,
};
use toughtree::twdp::{clique_tree, toughness_exact, Toughness};
use toughtree::{Graph, Vertex};

/// Adds a vertex joined to a random clique (a random subset of a random
/// maximal clique of the chordal graph `g`).
fn add_simplicial(g: &mut Graph, rng: &mut ChaCha8Rng) {
    let tree = clique_tree(g).unwrap();
    let bag = tree.bags.choose(rng).unwrap().clone();
    let size = rng.random_range(1..=bag.len());
    let mut attach = bag;
    while attach.len() > size {
        let i = rng.random_range(0..attach.len());
        attach.swap_remove(i);
    }
    let v = g.add_vertex();
    for w in attach {
        g.add_edge(v, w);
    }
}

#[test]
fn simplicial_additions_never_raise_toughness() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut steps = 0;
    for _ in 0..25 {
        let mut g = random_chordal(4, 2, &mut rng);
        let mut prev = toughness_exact(&g).unwrap().value;
        for _ in 0..24 {
            add_simplicial(&mut g, &mut rng);
            let now = toughness_exact(&g).unwrap().value;
            assert!(now <= prev, "{now} after {prev}");
            prev = now;
            steps += 1;
        }
    }
    assert!(steps >= 500);
}

#[test]
fn squares_of_trees_are_one_tough() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.random_range(2..=40);
        let t = random_tree(n, 5, &mut rng);
        let r = toughness_exact(&square(&t)).unwrap();
        assert!(r.value.at_least(1, 1), "{} on {t:?}", r.value);
        assert!(r.verify(&square(&t)));
    }
    for _ in 0..60 {
        let n = rng.random_range(3..=12);
        let g = random_chordal(n, 2, &mut rng);
        assert!(bf_toughness(&square(&g)).unwrap().value.at_least(2, 1));
    }
}

/// Random t-tough pair `(G+, v)` whose deletion `G+ - v` is t-tough too.
fn tough_with_vertex(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Vertex) {
    loop {
        let (g, _) = random_tough_ktree(3, n, 1, 1, rng).unwrap();
        let v = rng.random_range(0..g.n());
        let (h, _) = g.remove_vertices(&[v]);
        if bf_toughness(&h).unwrap().value.at_least(1, 1) {
            return (g, v);
        }
    }
}

#[test]
fn gluing_keeps_one_toughness() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let (s1, s2) = (rng.random_range(5..=9), rng.random_range(5..=9));
        let (p1, v1) = tough_with_vertex(&mut rng, s1);
        let (p2, v2) = tough_with_vertex(&mut rng, s2);
        let (g1, map1) = p1.remove_vertices(&[v1]);
        let (g2, map2) = p2.remove_vertices(&[v2]);
        let pos = |map: &[Vertex], x: Vertex| map.iter().position(|&y| y == x).unwrap();
        let n1: Vec<Vertex> = p1.neighbors(v1).iter().map(|&x| pos(&map1, x)).collect();
        let n2: Vec<Vertex> = p2.neighbors(v2).iter().map(|&x| pos(&map2, x) + g1.n()).collect();
        let mut u = g1.disjoint_union(&g2);
        // random bipartite edges, then patch so every side vertex has one
        for &a in &n1 {
            for &b in &n2 {
                if rng.random_bool(0.3) {
                    u.add_edge(a, b);
                }
            }
        }
        for &a in &n1 {
            if !n2.iter().any(|&b| u.has_edge(a, b)) {
                u.add_edge(a, *n2.choose(&mut rng).unwrap());
            }
        }
        for &b in &n2 {
            if !n1.iter().any(|&a| u.has_edge(a, b)) {
                u.add_edge(*n1.choose(&mut rng).unwrap(), b);
            }
        }
        assert!(bf_toughness(&u).unwrap().value.at_least(1, 1));
    }
}

#[test]
fn tough_chordal_planar_classes() {
    for n in 4..=9 {
        for g in enumerate_tough_ktrees(3, n, 1, 1, true).unwrap().graphs {
            let class = classify_tough_chordal_planar(&g).unwrap();
            let planar = is_planar_3tree(&g).unwrap();
            assert_eq!(planar, is_planar_3tree_by_search(&g).unwrap());
            assert_eq!(class == ChordalPlanarClass::ThreeTree, planar);
        }
    }
}

#[test]
fn complete_graphs_are_infinitely_tough() {
    for n in 1..=6 {
        assert_eq!(toughness_exact(&Graph::complete(n)).unwrap().value, Toughness::Infinite);
    }
    assert_eq!(toughness_exact(&Graph::star(3)).unwrap().value, Toughness::new(1, 3));
    assert_eq!(bf_toughness(&Graph::cycle(6)).unwrap().value, Toughness::new(1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn ktree_characterisation_agrees(seed in any::<u64>(), k in 1usize..=4, extra in 0usize..8, flip in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut g, cert) = random_ktree(k, k + extra, &mut rng);
        prop_assert!(cert.verify(&g));
        if flip && g.n() >= 2 {
            // one edge more or less usually breaks the k-tree shape
            let a = rng.random_range(0..g.n());
            let b = rng.random_range(0..g.n());
            if a != b && !g.remove_edge(a, b) {
                g.add_edge(a, b);
            }
        }
        prop_assert_eq!(ktree_by_characterization(&g, k), recognize_ktree(&g, k).is_some());
    }

    #[test]
    fn chordal_graphs_round_trip(seed in any::<u64>(), n in 1usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = random_chordal(n, 1, &mut rng);
        g.set_label(0, "white");
        prop_assert!(is_chordal(&g).is_some());
        let (h, cert) = from_json(&to_json(&g, None)).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert!(cert.is_none());
        let (t, c) = random_ktree(3, n + 3, &mut rng);
        let (t2, c2) = from_json(&to_json(&t, Some(&c))).unwrap();
        prop_assert_eq!(t2, t);
        prop_assert_eq!(c2, Some(c));
    }
}
