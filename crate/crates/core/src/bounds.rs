//! Lower bounds on the hamiltonian chromatic number of a tree.
//!
//! `lb_W(T) = (n−1)(n−1−ζ) + ζ′ − 2𝓛_W(T)` is rooted at the weight
//! center(s); `lb(T) = (n−1)(n−1−ε) + ε′ − 2𝓛(T)` is the older bound
//! rooted at the graph center(s). Both are only meaningful for trees with
//! `n ≥ 4` and a vertex of degree at least 3.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rooted::RootedView;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub lb_weight: i64,
    pub lb_center: i64,
    pub difference: i64,
    pub zeta: u8,
    pub epsilon: u8,
    pub epsilon_prime: u8,
    pub total_level: u64,
    pub center_total_level: u64,
    pub db_half: bool,
    pub applicable: bool,
}

/// `n ≥ 4` and `Δ(T) ≥ 3`.
pub fn is_applicable(tree: &Tree) -> bool {
    tree.order() >= 4 && tree.max_degree() >= 3
}

fn require_applicable(tree: &Tree, force: bool) -> Result<()> {
    if force || is_applicable(tree) {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!(
            "bound requires n >= 4 and max degree >= 3 (n = {}, max degree = {})",
            tree.order(),
            tree.max_degree()
        )))
    }
}

/// `(n−1)(n−1−c) + (1−c) − 2·levels` in checked arithmetic.
fn level_bound(n: usize, two_roots: u8, levels: u64) -> Result<i64> {
    let overflow = || Error::Overflow("lower bound");
    let m = i64::try_from(n).map_err(|_| overflow())? - 1;
    let c = two_roots as i64;
    let levels = i64::try_from(levels).map_err(|_| overflow())?;
    m.checked_mul(m - c)
        .and_then(|x| x.checked_add(1 - c))
        .and_then(|x| x.checked_sub(levels.checked_mul(2)?))
        .ok_or_else(overflow)
}

/// `lb_W(T)`. With `force` the value is returned for any tree, but it only
/// bounds `hc(T)` when the tree is applicable.
pub fn lower_bound_weight(rv: &RootedView, force: bool) -> Result<i64> {
    require_applicable(rv.tree(), force)?;
    level_bound(rv.order(), rv.zeta(), rv.total_level())
}

/// Σ_u d(u, C(T)) over the graph center(s).
pub fn center_total_level(tree: &Tree) -> u64 {
    let centers = tree.graph_centers();
    let mut best: Vec<usize> = tree.distances_from(centers[0]).unwrap();
    for &c in &centers[1..] {
        for (b, d) in best.iter_mut().zip(tree.distances_from(c).unwrap()) {
            *b = (*b).min(d);
        }
    }
    best.iter().map(|&d| d as u64).sum()
}

/// ε(T): 1 when the graph center has two vertices.
pub fn epsilon(tree: &Tree) -> u8 {
    (tree.graph_centers().len() == 2) as u8
}

/// `lb(T)`, the graph-center bound.
pub fn lower_bound_center(tree: &Tree, force: bool) -> Result<i64> {
    require_applicable(tree, force)?;
    level_bound(tree.order(), epsilon(tree), center_total_level(tree))
}

/// Maximum pairwise distance at most `n/2`.
pub fn is_db_half(rv: &RootedView) -> bool {
    2 * rv.tree().diameter() <= rv.order()
}

pub fn compare_bounds(rv: &RootedView, force: bool) -> Result<BoundReport> {
    let tree = rv.tree();
    require_applicable(tree, force)?;
    let lb_weight = lower_bound_weight(rv, true)?;
    let lb_center = lower_bound_center(tree, true)?;
    let epsilon = epsilon(tree);
    Ok(BoundReport {
        n: tree.order(),
        lb_weight,
        lb_center,
        difference: lb_weight
            .checked_sub(lb_center)
            .ok_or(Error::Overflow("bound difference"))?,
        zeta: rv.zeta(),
        epsilon,
        epsilon_prime: 1 - epsilon,
        total_level: rv.total_level(),
        center_total_level: center_total_level(tree),
        db_half: is_db_half(rv),
        applicable: is_applicable(tree),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rooted::analyze;

    fn star(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|l| (0, l)).collect();
        Tree::new(n, &edges).unwrap()
    }

    fn broom(n: usize, d: usize) -> Tree {
        let mut edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
        edges.extend((d..n).map(|l| (0, l)));
        Tree::new(n, &edges).unwrap()
    }

    #[test]
    fn star_bounds() {
        let rv = analyze(&star(5));
        assert_eq!(lower_bound_weight(&rv, false).unwrap(), 9);
        assert_eq!(lower_bound_center(rv.tree(), false).unwrap(), 9);
        assert!(is_db_half(&rv));
    }

    #[test]
    fn broom_bounds() {
        let rv = analyze(&broom(10, 4));
        assert_eq!(lower_bound_weight(&rv, false).unwrap(), 58);
        assert_eq!(lower_bound_center(rv.tree(), false).unwrap(), 50);
        let r = compare_bounds(&rv, false).unwrap();
        assert_eq!(r.difference, 8);
        assert_eq!(r.epsilon, 0);
        assert_eq!(r.center_total_level, 16);

        let b3 = compare_bounds(&analyze(&broom(6, 3)), false).unwrap();
        assert_eq!((b3.lb_weight, b3.lb_center, b3.difference), (14, 12, 2));
        assert_eq!(b3.epsilon, 1);
    }

    #[test]
    fn paths_need_force() {
        let p4 = broom(4, 4);
        let rv = analyze(&p4);
        assert!(matches!(
            lower_bound_weight(&rv, false),
            Err(Error::NotApplicable(_))
        ));
        // (3)(2) + 0 - 2*2
        assert_eq!(lower_bound_weight(&rv, true).unwrap(), 2);
        assert!(!is_db_half(&rv));
        assert!(compare_bounds(&rv, false).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            level_bound(usize::MAX, 0, 0),
            Err(Error::Overflow(_))
        ));
    }
}
