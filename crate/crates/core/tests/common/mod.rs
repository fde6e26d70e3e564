//! Oracles shared by the integration tests. Nothing here goes through the
//! level/ancestor machinery or the ordering search.
#![allow(dead_code)]

use std::collections::VecDeque;

use hctree::{Coloring, Tree};
use proptest::prelude::*;

/// Path length between every pair by plain BFS over the edge list.
pub fn bfs_distances(tree: &Tree) -> Vec<Vec<usize>> {
    let n = tree.order();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in tree.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Direct check of `d(u,v) + |h(u) − h(v)| ≥ n − 1` with BFS distances.
pub fn is_hamiltonian(tree: &Tree, colors: &[u64]) -> bool {
    let n = tree.order();
    let d = bfs_distances(tree);
    (0..n).all(|u| (u + 1..n).all(|v| d[u][v] as u64 + colors[u].abs_diff(colors[v]) >= (n - 1) as u64))
}

/// Minimum span over every coloring with colors in `0..=cap`.
pub fn enumerate_min_span(tree: &Tree, cap: u64) -> u64 {
    let n = tree.order();
    let d = bfs_distances(tree);
    let mut colors = vec![0u64; n];
    let mut best = u64::MAX;
    loop {
        let ok = (0..n).all(|u| {
            (u + 1..n).all(|v| d[u][v] as u64 + colors[u].abs_diff(colors[v]) >= (n - 1) as u64)
        });
        if ok {
            let span = colors.iter().max().unwrap() - colors.iter().min().unwrap();
            best = best.min(span);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            if colors[i] < cap {
                colors[i] += 1;
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

pub fn valid_coloring(tree: &Tree, c: &Coloring) -> bool {
    is_hamiltonian(tree, c.colors())
}

/// Random tree: vertex `i` attaches to a random earlier vertex, then ids are
/// shuffled.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (parents, Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
        .prop_map(|(parents, perm)| {
            let n = perm.len();
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (perm[i + 1], perm[p]))
                .collect();
            Tree::new(n, &edges).unwrap()
        })
}
