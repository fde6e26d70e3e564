mod common;

use hctree::corpus::{corpus, trees_of_order};
use hctree::rooted::BranchRelation;
use hctree::{analyze, Tree};
use proptest::prelude::*;

use common::{arb_tree, bfs_distances};

fn check_levels_and_distances(t: &Tree) {
    let rv = analyze(t);
    let d = bfs_distances(t);
    let n = t.order();
    for u in 0..n {
        let to_center = rv.weight_centers().iter().map(|&w| d[u][w]).min().unwrap();
        assert_eq!(rv.level(u), to_center);
        for v in 0..n {
            assert_eq!(rv.detour_distance(u, v).unwrap(), d[u][v], "pair {u},{v} in {t:?}");
        }
    }
    assert_eq!(rv.total_level(), (0..n).map(|u| rv.level(u) as u64).sum::<u64>());
}

fn check_center_structure(t: &Tree) {
    let rv = analyze(t);
    let w = rv.weight_centers();
    let weights: Vec<u64> = (0..t.order()).map(|v| t.vertex_weight(v).unwrap()).collect();
    let min = *weights.iter().min().unwrap();
    assert_eq!(w.to_vec(), (0..t.order()).filter(|&v| weights[v] == min).collect::<Vec<_>>());
    match w.len() {
        1 => assert_eq!(rv.zeta(), 0),
        2 => {
            assert_eq!(rv.zeta(), 1);
            assert!(t.neighbors(w[0]).contains(&w[1]));
            let side0 = (0..t.order()).filter(|&v| rv.side(v) == w[0]).count();
            assert_eq!(2 * side0, t.order());
        }
        k => panic!("{k} weight centers"),
    }
}

fn check_phi_delta(t: &Tree) {
    let rv = analyze(t);
    let n = t.order();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let rel = rv.branch_relation(u, v).unwrap();
            let phi = rv.phi(u, v).unwrap();
            assert_eq!(phi == 0, rel != BranchRelation::Same, "{u},{v}: {rel:?}");
            let crosses = rv.zeta() == 1 && rv.side(u) != rv.side(v);
            assert_eq!(rv.delta(u, v).unwrap() == 1, crosses);
            if rel == BranchRelation::Opposite {
                assert_eq!(rv.delta(u, v).unwrap(), 1);
            }
        }
    }
}

#[test]
fn level_identity_matches_bfs_on_all_small_trees() {
    for t in corpus(1..=9, false) {
        check_levels_and_distances(&t);
        check_center_structure(&t);
        check_phi_delta(&t);
    }
}

#[test]
fn graph_centers_minimise_eccentricity() {
    for n in 1..=9 {
        for t in trees_of_order(n) {
            let ecc: Vec<usize> = (0..n).map(|v| t.eccentricity(v).unwrap()).collect();
            let min = *ecc.iter().min().unwrap();
            let expect: Vec<usize> = (0..n).filter(|&v| ecc[v] == min).collect();
            assert_eq!(t.graph_centers(), expect);
            assert_eq!(t.diameter(), *ecc.iter().max().unwrap());
        }
    }
}

proptest! {
    #[test]
    fn level_identity_on_random_trees(t in arb_tree(40)) {
        check_levels_and_distances(&t);
        check_center_structure(&t);
    }

    #[test]
    fn relations_on_random_trees(t in arb_tree(20)) {
        check_phi_delta(&t);
    }
}
