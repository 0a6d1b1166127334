use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toughtree::generators::{
    add_universal, balanced_cubic_tree, basic_3twig, build_h0, h_family, hnk, random_ktree, square, ArrangedBlock,
    FamilyMetrics, WHITE,
};
use toughtree::oracles::{bf_longest_cycle, bf_longest_path, enumerate_ktrees};
use toughtree::twdp::{
    clique_tree, has_hamilton_path_between, longest_cycle, longest_path, separator_profile, toughness_exact, Toughness,
};
use toughtree::{Error, Graph};

#[test]
fn clique_tree_widths() {
    let k4 = clique_tree(&Graph::complete(4)).unwrap();
    assert_eq!((k4.bags.len(), k4.width), (1, 3));
    let h0 = build_h0();
    let t = clique_tree(&h0).unwrap();
    assert!(t.validate(&h0));
    assert_eq!(t.width, 3);
    let sq = square(&balanced_cubic_tree(3).unwrap());
    assert_eq!(clique_tree(&sq).unwrap().width, 3);
    assert!(matches!(clique_tree(&Graph::cycle(4)), Err(Error::NotChordal)));
}

#[test]
fn small_path_and_cycle_values() {
    assert_eq!(longest_path(&Graph::path(5), None).unwrap().0, 5);
    assert!(has_hamilton_path_between(&Graph::complete(4), 0, 3).unwrap());
    let b = basic_3twig(3).unwrap();
    assert_eq!((bf_longest_path(&b).unwrap(), bf_longest_cycle(&b).unwrap()), (7, 7));
    let c5 = Graph::cycle(5);
    assert_eq!((bf_longest_path(&c5).unwrap(), bf_longest_cycle(&c5).unwrap()), (5, 5));
    let sq = square(&balanced_cubic_tree(2).unwrap());
    assert_eq!((bf_longest_path(&sq).unwrap(), bf_longest_cycle(&sq).unwrap()), (10, 8));
    let (len, w) = longest_path(&sq, None).unwrap();
    assert_eq!(len, 10);
    assert!(has_hamilton_path_between(&sq, w.vertices[0], w.vertices[9]).unwrap());
    assert_eq!(enumerate_ktrees(3, 4).unwrap().graphs.len(), 1);
}

#[test]
fn h0_has_no_hamilton_path_between_sampled_pairs() {
    let h0 = build_h0();
    for (a, b) in [(0, 1), (3, 70), (32, 33), (10, 50)] {
        assert!(!has_hamilton_path_between(&h0, a, b).unwrap());
    }
}

#[test]
fn h0_weighted_white_counts() {
    let h0 = build_h0();
    let w: Vec<i64> = h0.vertices().map(|v| i64::from(h0.label(v) == Some(WHITE))).collect();
    assert_eq!(longest_cycle(&h0, Some(&w)).unwrap().0, 22);
    assert_eq!(longest_path(&h0, Some(&w)).unwrap().0, 24);
}

#[test]
fn family_sizes() {
    assert_eq!(hnk(0, 5).unwrap().n(), 73);
    let k4 = square(&balanced_cubic_tree(1).unwrap());
    assert!(k4.is_complete() && k4.n() == 4);
    let h1 = h_family(1).unwrap();
    assert_eq!(h1.n(), 2171);
    assert_eq!(h1.vertices_labeled(WHITE).len(), 900);
    let m = FamilyMetrics::at(1).unwrap();
    assert_eq!((m.f, m.c, m.p), (2171, 1427, 1555));
    assert!(matches!(h_family(4), Err(Error::SizeGuard { .. })));
}

#[test]
fn arranged_block_from_basic_twig() {
    // three whites, at most two of them on a cycle of the 7-vertex block
    let g = basic_3twig(3).unwrap();
    let block = ArrangedBlock::new(g, vec![4, 5, 6], vec![0, 1, 2], 3).unwrap();
    for level in 0..=3 {
        let h = block.expand(level).unwrap();
        let (verts, cycle) = block.closed_form_bounds(level).unwrap();
        assert_eq!(h.n() as u128, verts);
        let (c, w) = longest_cycle(&h, None).unwrap();
        assert!(w.is_valid_in(&h));
        assert!(c as u128 <= cycle, "level {level}: {c} > {cycle}");
    }
}

#[test]
fn universal_vertices_raise_toughness_of_h0() {
    let t4 = toughness_exact(&hnk(0, 4).unwrap()).unwrap();
    assert!(t4.value > Toughness::new(1, 1));
    let h0 = build_h0();
    assert_eq!(toughness_exact(&h0).unwrap().value, Toughness::new(1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn engine_sanity(seed in any::<u64>(), k in 1usize..=4, extra in 1usize..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, _) = random_ktree(k, k + extra, &mut rng);
        let (p, pw) = longest_path(&g, None).unwrap();
        let (c, cw) = longest_cycle(&g, None).unwrap();
        prop_assert!(pw.is_valid_in(&g) && pw.len() == p as usize);
        prop_assert!(c <= p);
        if c > 0 {
            prop_assert!(cw.is_valid_in(&g) && cw.len() == c as usize);
        }
        let profile = separator_profile(&g).unwrap();
        let known: Vec<usize> = profile.iter().flatten().copied().collect();
        prop_assert!(known.windows(2).all(|w| w[0] <= w[1]));
        let report = toughness_exact(&g).unwrap();
        prop_assert!(report.verify(&g));
        if k < 4 {
            let plus = add_universal(&g, 1);
            prop_assert!(longest_path(&plus, None).unwrap().0 >= p);
        }
        let weights: Vec<i64> = g.vertices().map(|_| rng.random_range(0..5)).collect();
        let (wp, wpw) = longest_path(&g, Some(&weights)).unwrap();
        prop_assert_eq!(wpw.weight(Some(&weights)), wp);
    }
}
