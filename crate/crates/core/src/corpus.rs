//! Exhaustive corpora of non-isomorphic trees, built by leaf extension and
//! deduplicated on a center-rooted canonical encoding.

use std::collections::BTreeMap;

use crate::tree::{Tree, Vertex};

/// Canonical string of `tree`: the smallest parenthesised encoding among its
/// graph-center rootings. Equal strings mean isomorphic trees.
pub fn canonical_form(tree: &Tree) -> String {
    tree.graph_centers()
        .into_iter()
        .map(|c| encode(tree, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode(tree: &Tree, v: Vertex, parent: Vertex) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| encode(tree, u, v))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical form. Practical up to about `n = 14`.
pub fn trees_of_order(n: usize) -> Vec<Tree> {
    assert!(n >= 1, "trees have at least one vertex");
    let mut level: BTreeMap<String, Tree> = BTreeMap::new();
    let k1 = Tree::new(1, &[]).unwrap();
    level.insert(canonical_form(&k1), k1);
    for m in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..m {
                let mut edges = t.edges().to_vec();
                edges.push((v, m));
                let grown = Tree::new(m + 1, &edges).unwrap();
                next.entry(canonical_form(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All trees with orders in `range`, excluding paths when `skip_paths`.
pub fn corpus(range: std::ops::RangeInclusive<usize>, skip_paths: bool) -> Vec<Tree> {
    range
        .flat_map(trees_of_order)
        .filter(|t| !(skip_paths && t.is_path()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=10).map(|n| trees_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Tree::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let b = Tree::new(4, &[(3, 2), (2, 0), (2, 1)]).unwrap();
        let p = Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&p));
    }
}
