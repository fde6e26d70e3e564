//! A tree seen from its weight center(s): detour levels, ancestors,
//! branches and the level-based distance identity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::tree::{Tree, Vertex};

/// How two vertices sit relative to the weight-center root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchRelation {
    /// Both in the branch hanging off the same child of a weight center.
    Same,
    /// Branches at two children of the same weight center.
    Different,
    /// Branches attached to the two different weight centers.
    Opposite,
    /// At least one of the vertices is a weight center.
    InvolvesCenter,
}

/// A tree rooted at its weight center set `W(T)`.
#[derive(Debug, Clone)]
pub struct RootedView {
    tree: Tree,
    weight_centers: Vec<Vertex>,
    level: Vec<usize>,
    parent: Vec<Option<Vertex>>,
    branch: Vec<Option<usize>>,
    side: Vec<Vertex>,
    branch_roots: Vec<Vertex>,
    total_level: u64,
}

pub fn analyze(tree: &Tree) -> RootedView {
    RootedView::new(tree.clone())
}

impl RootedView {
    pub fn new(tree: Tree) -> RootedView {
        let n = tree.order();
        let weights = tree.vertex_weights();
        let min = *weights.iter().min().unwrap();
        let weight_centers: Vec<Vertex> = (0..n).filter(|&v| weights[v] == min).collect();
        debug_assert!(matches!(weight_centers.len(), 1 | 2));

        let mut level = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut side = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &w in &weight_centers {
            level[w] = 0;
            side[w] = w;
            queue.push_back(w);
        }
        while let Some(u) = queue.pop_front() {
            for &v in tree.neighbors(u) {
                if level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    parent[v] = Some(u);
                    side[v] = side[u];
                    queue.push_back(v);
                }
            }
        }

        let mut branch_roots: Vec<Vertex> = (0..n).filter(|&v| level[v] == 1).collect();
        branch_roots.sort_unstable();
        let mut branch = vec![None; n];
        for (id, &r) in branch_roots.iter().enumerate() {
            branch[r] = Some(id);
        }
        // BFS from the roots visits ancestors before descendants; levels are
        // nondecreasing in vertex order of a BFS, so sort by level.
        let mut by_level: Vec<Vertex> = (0..n).collect();
        by_level.sort_by_key(|&v| level[v]);
        for v in by_level {
            if level[v] >= 2 {
                branch[v] = branch[parent[v].unwrap()];
            }
        }

        let total_level = level.iter().map(|&l| l as u64).sum();
        RootedView {
            tree,
            weight_centers,
            level,
            parent,
            branch,
            side,
            branch_roots,
            total_level,
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn weight_centers(&self) -> &[Vertex] {
        &self.weight_centers
    }

    pub fn is_weight_center(&self, v: Vertex) -> bool {
        self.level[v] == 0
    }

    /// ζ(T): 1 when there are two weight centers.
    pub fn zeta(&self) -> u8 {
        (self.weight_centers.len() == 2) as u8
    }

    pub fn zeta_prime(&self) -> u8 {
        1 - self.zeta()
    }

    pub fn level(&self, v: Vertex) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    /// Branch id of `v`; `None` for weight centers. Ids follow the ascending
    /// order of the branch root (the weight-center neighbour) ids.
    pub fn branch(&self, v: Vertex) -> Option<usize> {
        self.branch[v]
    }

    pub fn branch_count(&self) -> usize {
        self.branch_roots.len()
    }

    pub fn branch_root(&self, id: usize) -> Vertex {
        self.branch_roots[id]
    }

    /// The weight center owning `v`.
    pub fn side(&self, v: Vertex) -> Vertex {
        self.side[v]
    }

    /// 𝓛_W(T) = Σ 𝓛(u).
    pub fn total_level(&self) -> u64 {
        self.total_level
    }

    /// Maximum level over common ancestors of `u` and `v`, where every vertex
    /// counts as its own ancestor. Zero when the vertices hang off different
    /// weight centers.
    pub fn phi(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.tree.check_vertex(u)?;
        self.tree.check_vertex(v)?;
        Ok(self.phi_unchecked(u, v))
    }

    pub(crate) fn phi_unchecked(&self, mut u: Vertex, mut v: Vertex) -> usize {
        if self.side[u] != self.side[v] {
            return 0;
        }
        while u != v {
            if self.level[u] >= self.level[v] {
                u = self.parent[u].unwrap();
            } else {
                v = self.parent[v].unwrap();
            }
        }
        self.level[u]
    }

    /// 1 iff there are two weight centers and the `u`-`v` path crosses the
    /// edge joining them.
    pub fn delta(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.tree.check_vertex(u)?;
        self.tree.check_vertex(v)?;
        Ok(self.delta_unchecked(u, v))
    }

    pub(crate) fn delta_unchecked(&self, u: Vertex, v: Vertex) -> usize {
        (self.side[u] != self.side[v]) as usize
    }

    /// `D(u,v) = 𝓛(u) + 𝓛(v) − 2φ(u,v) + δ(u,v)`, which in a tree is the
    /// ordinary path length. `u == v` gives 0.
    pub fn detour_distance(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.tree.check_vertex(u)?;
        self.tree.check_vertex(v)?;
        Ok(self.detour_unchecked(u, v))
    }

    pub(crate) fn detour_unchecked(&self, u: Vertex, v: Vertex) -> usize {
        self.level[u] + self.level[v] - 2 * self.phi_unchecked(u, v) + self.delta_unchecked(u, v)
    }

    /// Full `n x n` detour distance table, row-major.
    pub fn distance_matrix(&self) -> Vec<usize> {
        let n = self.order();
        let mut m = vec![0; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let d = self.detour_unchecked(u, v);
                m[u * n + v] = d;
                m[v * n + u] = d;
            }
        }
        m
    }

    pub fn branch_relation(&self, u: Vertex, v: Vertex) -> Result<BranchRelation> {
        self.tree.check_vertex(u)?;
        self.tree.check_vertex(v)?;
        Ok(self.relation_unchecked(u, v))
    }

    pub(crate) fn relation_unchecked(&self, u: Vertex, v: Vertex) -> BranchRelation {
        match (self.branch[u], self.branch[v]) {
            (None, _) | (_, None) => BranchRelation::InvolvesCenter,
            (Some(a), Some(b)) if a == b => BranchRelation::Same,
            _ if self.side[u] == self.side[v] => BranchRelation::Different,
            _ => BranchRelation::Opposite,
        }
    }

    /// Whether consecutive vertices `u`, `v` of an ordering may be adjacent in
    /// a lower-bound-attaining line-up: different branches with one weight
    /// center, opposite sides with two (so `D = 𝓛(u) + 𝓛(v) + ζ`).
    pub(crate) fn alternates(&self, u: Vertex, v: Vertex) -> bool {
        if self.zeta() == 1 {
            self.side[u] != self.side[v]
        } else {
            matches!(
                self.relation_unchecked(u, v),
                BranchRelation::Different | BranchRelation::InvolvesCenter
            ) && u != v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|l| (0, l)).collect();
        Tree::new(n, &edges).unwrap()
    }

    fn broom_10_4() -> Tree {
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        edges.extend((4..10).map(|l| (0, l)));
        Tree::new(10, &edges).unwrap()
    }

    // A_4: centers 0-1; 0 has leaves 2,3,4 and 1 has leaves 5,6,7.
    fn a4() -> Tree {
        Tree::new(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap()
    }

    #[test]
    fn path_has_two_centers() {
        let p4 = Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let rv = analyze(&p4);
        assert_eq!(rv.weight_centers(), &[1, 2]);
        assert_eq!(rv.zeta(), 1);
        assert_eq!(rv.total_level(), 2);
        assert_eq!(rv.delta(0, 3).unwrap(), 1);
    }

    #[test]
    fn star_levels() {
        let rv = analyze(&star(5));
        assert_eq!(rv.weight_centers(), &[0]);
        assert_eq!(rv.zeta(), 0);
        assert_eq!(rv.total_level(), 4);
        assert_eq!(rv.phi(1, 2).unwrap(), 0);
        assert_eq!(rv.detour_distance(1, 2).unwrap(), 2);
        assert_eq!(rv.detour_distance(3, 3).unwrap(), 0);
        assert_eq!(rv.branch_relation(1, 2).unwrap(), BranchRelation::Different);
        assert_eq!(rv.branch_relation(0, 2).unwrap(), BranchRelation::InvolvesCenter);
        for v in 1..5 {
            assert_eq!(rv.delta(v, 0).unwrap(), 0);
        }
    }

    #[test]
    fn a4_two_centers() {
        let rv = analyze(&a4());
        assert_eq!(rv.weight_centers(), &[0, 1]);
        assert_eq!(rv.total_level(), 6);
        assert_eq!(rv.phi(2, 5).unwrap(), 0);
        assert_eq!(rv.delta(0, 1).unwrap(), 1);
        assert_eq!(rv.detour_distance(2, 5).unwrap(), 3);
        assert_eq!(rv.branch_relation(2, 5).unwrap(), BranchRelation::Opposite);
        assert_eq!(rv.branch_count(), 6);
    }

    #[test]
    fn broom_ancestors() {
        let rv = analyze(&broom_10_4());
        assert_eq!(rv.weight_centers(), &[0]);
        assert_eq!(rv.phi(2, 3).unwrap(), 2);
        assert_eq!(rv.branch_relation(2, 3).unwrap(), BranchRelation::Same);
        assert_eq!(rv.detour_distance(3, 9).unwrap(), 4);
        // path branch rooted at 1 gets id 0; leaves 4..9 get ids 1..6
        assert_eq!(rv.branch(3), Some(0));
        assert_eq!(rv.branch(9), Some(6));
        assert!(rv.phi(0, 10).is_err());
    }
}
