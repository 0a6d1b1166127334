use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toughtree::generators::{basic_3twig, build_h0, random_tough_ktree};
use toughtree::hamilton::{
    find_twigs, find_two_nonadjacent_twigs, hamilton_cycle, hamilton_path_between, is_squeeze, theta_spanner,
};
use toughtree::ktree::recognize_ktree;
use toughtree::oracles::{bf_toughness, canonical_form, enumerate_tough_ktrees};
use toughtree::twdp::has_hamilton_path_between;
use toughtree::{Error, Graph, Vertex};

/// Tough k-trees in the constructors' sense: toughness above k/3.
fn tough(k: usize, n: usize) -> Vec<Graph> {
    enumerate_tough_ktrees(k, n, k as u64, 3, true).unwrap().graphs
}

fn degree_k(g: &Graph, k: usize) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) == k).collect()
}

#[test]
fn one_tough_ktree_on_k_plus_3_vertices() {
    for k in 2..=4 {
        assert_eq!(tough(k, k + 3).len(), 1, "k = {k}");
    }
}

#[test]
fn twig_examples() {
    // K_{k+1} plus a simplicial vertex is K_{k+2} minus an edge: the vertices
    // next to the new one are universal and the others have empty buds
    let mut g = Graph::complete(4);
    let v = g.add_vertex();
    for w in 0..3 {
        g.add_edge(v, w);
    }
    assert!(find_twigs(&g, 3).unwrap().is_empty());
    assert!(find_twigs(&Graph::complete(3), 3).unwrap().is_empty());
    assert!(matches!(find_twigs(&Graph::cycle(5), 2), Err(Error::NotKTree { k: 2 })));

    let twigs = find_twigs(&tough(3, 6)[0], 3).unwrap();
    assert!(!twigs.is_empty());
}

#[test]
fn two_nonadjacent_twigs_on_k_plus_4_vertices() {
    for k in 2..=4 {
        let basic = basic_3twig(k).unwrap();
        assert_eq!(find_two_nonadjacent_twigs(&basic, k).unwrap(), None);
        let basic_form = canonical_form(&basic);
        let all = tough(k, k + 4);
        assert!(all.iter().any(|g| canonical_form(g) == basic_form), "k = {k}");
        for g in all {
            let pair = find_two_nonadjacent_twigs(&g, k).unwrap();
            if canonical_form(&g) == basic_form {
                assert!(pair.is_none());
                continue;
            }
            let (a, b) = pair.expect("two twigs");
            assert!(!g.has_edge(a.v, b.v));
            assert!(a.bud.iter().all(|s| !b.bud.contains(s)));
        }
    }
    assert!(find_two_nonadjacent_twigs(&build_h0(), 3).unwrap().is_some());
    assert!(find_two_nonadjacent_twigs(&Graph::complete(4), 3).is_err());
}

#[test]
fn spanner_on_the_six_vertex_tough_3tree() {
    let g = &tough(3, 6)[0];
    let ends = degree_k(g, 3);
    assert_eq!(ends.len(), 2);
    let s = theta_spanner(g, 3, ends[0], ends[1]).unwrap();
    assert!(s.is_valid_in(g));
    assert!(theta_spanner(&Graph::complete(4), 3, 0, 1).is_err());
    assert!(theta_spanner(g, 3, ends[0], ends[0]).is_err());
}

#[test]
fn spanners_between_all_degree_k_pairs() {
    for (k, top) in [(3, 9), (4, 9)] {
        for n in k + 2..=top {
            for g in tough(k, n) {
                let ends = degree_k(&g, k);
                for (i, &a) in ends.iter().enumerate() {
                    for &b in &ends[i + 1..] {
                        let s = theta_spanner(&g, k, a, b).unwrap();
                        assert!(s.is_valid_in(&g));
                    }
                }
            }
        }
    }
}

#[test]
fn hamilton_paths_for_tough_4trees() {
    for n in 4..=9 {
        for g in tough(4, n) {
            for a in g.vertices() {
                for b in g.vertices() {
                    if a == b {
                        continue;
                    }
                    let p = hamilton_path_between(&g, 4, a, b).unwrap();
                    assert!(p.is_hamiltonian_in(&g));
                    assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (a, b));
                    assert!(has_hamilton_path_between(&g, a, b).unwrap());
                }
            }
            if n >= 5 {
                assert!(hamilton_cycle(&g, 4).unwrap().is_hamiltonian_in(&g));
            }
        }
    }
}

#[test]
fn ends_that_are_the_only_twigs() {
    let mut seen = 0;
    for g in tough(3, 9) {
        let twigs = find_twigs(&g, 3).unwrap();
        if twigs.len() != 2 || g.has_edge(twigs[0].v, twigs[1].v) {
            continue;
        }
        let (a, b) = (twigs[0].v, twigs[1].v);
        let p = hamilton_path_between(&g, 3, a, b).unwrap();
        assert!(p.is_hamiltonian_in(&g));
        assert_eq!((p.vertices[0], p.vertices[8]), (a, b));
        assert!(has_hamilton_path_between(&g, a, b).unwrap());
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn larger_random_tough_ktrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (k, n) in [(3, 60), (3, 90), (4, 50), (5, 40)] {
        let (g, _) = random_tough_ktree(k, n, k as u64, 3, &mut rng).unwrap();
        assert!(g.n() > 2 * k, "growth stalled at {}", g.n());
        assert!(hamilton_cycle(&g, k).unwrap().is_hamiltonian_in(&g));
        for _ in 0..20 {
            let a = rng.random_range(0..g.n());
            let b = rng.random_range(0..g.n());
            if a != b {
                let p = hamilton_path_between(&g, k, a, b).unwrap();
                assert!(p.is_hamiltonian_in(&g));
                assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (a, b));
            }
        }
        let ends = degree_k(&g, k);
        if ends.len() >= 2 {
            assert!(theta_spanner(&g, k, ends[0], ends[ends.len() - 1]).unwrap().is_valid_in(&g));
        }
    }
}

#[test]
fn below_the_threshold_the_constructor_reports_it() {
    // toughness exactly 1: the buds of three white vertices are not squeezes
    let h0 = build_h0();
    match hamilton_cycle(&h0, 3) {
        Err(Error::Precondition(msg)) => assert!(msg.contains("toughness precondition violated")),
        other => panic!("unexpected {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A twig of G that is no twig of G^+ has a bud vertex that is a twig of G^+.
    #[test]
    fn new_twig(seed in any::<u64>(), k in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(k + 3..=15);
        let (plus, _) = random_tough_ktree(k, n, k as u64, 3, &mut rng).unwrap();
        let plus_twigs: Vec<Vertex> = find_twigs(&plus, k).unwrap().iter().map(|t| t.v).collect();
        for s in degree_k(&plus, k) {
            let (g, map) = plus.remove_vertices(&[s]);
            for t in find_twigs(&g, k).unwrap() {
                let orig = map[t.v];
                if plus_twigs.contains(&orig) {
                    continue;
                }
                prop_assert!(t.bud.iter().any(|&b| plus_twigs.contains(&map[b])));
            }
        }
    }

    /// Removing a bud keeps a k-tree at least as tough, and the bud is a squeeze.
    #[test]
    fn twig_removal(seed in any::<u64>(), k in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(k + 3..=15);
        let (g, _) = random_tough_ktree(k, n, k as u64, 3, &mut rng).unwrap();
        let t0 = bf_toughness(&g).unwrap().value;
        prop_assert!(t0.exceeds(k as u64, 3));
        let twigs = find_twigs(&g, k).unwrap();
        if g.n() >= k + 3 {
            prop_assert!(!twigs.is_empty());
        }
        for t in twigs {
            prop_assert!(is_squeeze(&g, t.v, &t.bud));
            let (h, _) = g.remove_vertices(&t.bud);
            prop_assert!(recognize_ktree(&h, k).is_some());
            prop_assert!(bf_toughness(&h).unwrap().value >= t0);
        }
    }
}
