mod common;

use hctree::bounds::{compare_bounds, is_applicable, lower_bound_center, lower_bound_weight};
use hctree::corpus::corpus;
use hctree::families::{generate, Family};
use hctree::solver::{exact_hc, ExactConfig};
use hctree::{analyze, Error, Tree};
use proptest::prelude::*;

use common::arb_tree;

fn broom_gap(family: Family) -> i64 {
    let (t, _) = generate(&family).unwrap();
    compare_bounds(&analyze(&t), true).unwrap().difference
}

#[test]
fn broom_gap_identities() {
    for k in 1..=50i64 {
        let ku = k as u64;
        assert_eq!(broom_gap(Family::BroomEven { k: ku }), 4 * k * (k - 1) * (k - 1), "B_{}", 2 * k);
        assert_eq!(broom_gap(Family::BroomOdd { k: ku }), 4 * k.pow(3) - 2 * k * k - k + 1, "B_{}", 2 * k + 1);
    }
}

#[test]
fn small_broom_values() {
    let r = compare_bounds(&analyze(&generate(&Family::BroomOdd { k: 1 }).unwrap().0), false).unwrap();
    assert_eq!((r.lb_weight, r.lb_center, r.difference), (14, 12, 2));
    let r = compare_bounds(&analyze(&generate(&Family::BroomEven { k: 2 }).unwrap().0), false).unwrap();
    assert_eq!((r.lb_weight, r.lb_center, r.difference), (58, 50, 8));
}

#[test]
fn applicability_is_enforced() {
    let path = Tree::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert!(!is_applicable(&path));
    assert!(matches!(lower_bound_weight(&analyze(&path), false), Err(Error::NotApplicable(_))));
    assert!(lower_bound_weight(&analyze(&path), true).is_ok());
    let star = Tree::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(is_applicable(&star));
    assert_eq!(lower_bound_weight(&analyze(&star), false).unwrap(), 4);
}

#[test]
fn weight_bound_never_exceeds_exact_on_small_trees() {
    let cfg = ExactConfig::default();
    for t in corpus(4..=7, true) {
        let rv = analyze(&t);
        let lb = lower_bound_weight(&rv, false).unwrap();
        let hc = exact_hc(&rv, &cfg).unwrap().hc as i64;
        assert!(hc >= lb, "hc {hc} < lb_W {lb} on {:?}", t.edges());
    }
}

proptest! {
    #[test]
    fn equal_centers_give_equal_bounds(t in arb_tree(30)) {
        prop_assume!(is_applicable(&t));
        let rv = analyze(&t);
        let r = compare_bounds(&rv, false).unwrap();
        prop_assert_eq!(r.lb_weight, lower_bound_weight(&rv, false).unwrap());
        prop_assert_eq!(r.lb_center, lower_bound_center(&t, false).unwrap());
        if rv.weight_centers() == t.graph_centers().as_slice() {
            prop_assert_eq!(r.difference, 0);
        }
        prop_assert!(r.difference >= 0);
    }
}
