//! Undirected trees on dense vertex ids `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An immutable, validated tree.
///
/// Construction checks that the edge list spans all `n` vertices without
/// cycles; diameter and maximum degree are computed once and cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    diameter: usize,
    max_degree: usize,
}

impl Tree {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "expected {} edges for {} vertices, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::BadVertexId { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::NotATree(format!("duplicate edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        // n-1 edges and connected implies acyclic.
        let dist = bfs(&adj, 0);
        if let Some(v) = dist.iter().position(|d| d.is_none()) {
            return Err(Error::NotATree(format!(
                "vertex {v} is unreachable from 0 (the edge set contains a cycle or is disconnected)"
            )));
        }

        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        let mut tree = Tree {
            n,
            edges: edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
            adj,
            diameter: 0,
            max_degree,
        };
        tree.diameter = tree.diameter_path().len() - 1;
        Ok(tree)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_path(&self) -> bool {
        self.max_degree <= 2
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertexId { vertex: v, n: self.n })
        }
    }

    /// Path lengths from `source` to every vertex.
    pub fn distances_from(&self, source: Vertex) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        Ok(bfs(&self.adj, source)
            .into_iter()
            .map(|d| d.expect("tree is connected"))
            .collect())
    }

    /// `w_T(v)`: the sum of distances from `v` to all vertices.
    pub fn vertex_weight(&self, v: Vertex) -> Result<u64> {
        Ok(self.distances_from(v)?.iter().map(|&d| d as u64).sum())
    }

    /// Vertex weights for every vertex in one pass (rerooting on subtree sizes).
    pub fn vertex_weights(&self) -> Vec<u64> {
        let n = self.n;
        let (order, parent) = self.bfs_order(0);
        let mut size = vec![1u64; n];
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                size[p] += size[v];
            }
        }
        let mut weight = vec![0u64; n];
        weight[0] = self.distances_from(0).unwrap().iter().map(|&d| d as u64).sum();
        for &v in order.iter().skip(1) {
            let p = parent[v].unwrap();
            weight[v] = weight[p] + n as u64 - 2 * size[v];
        }
        weight
    }

    /// Vertices of minimum eccentricity (the classical center), ascending.
    pub fn graph_centers(&self) -> Vec<Vertex> {
        let path = self.diameter_path();
        let d = path.len() - 1;
        let mut c = if d.is_multiple_of(2) {
            vec![path[d / 2]]
        } else {
            vec![path[d / 2], path[d / 2 + 1]]
        };
        c.sort_unstable();
        c
    }

    pub fn eccentricity(&self, v: Vertex) -> Result<usize> {
        Ok(self.distances_from(v)?.into_iter().max().unwrap_or(0))
    }

    /// Applies `perm` (old id -> new id) to every edge.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Tree> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::new(self.n, &edges)
    }

    /// BFS visiting order and parent links from `root`.
    pub(crate) fn bfs_order(&self, root: Vertex) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        (order, parent)
    }

    fn diameter_path(&self) -> Vec<Vertex> {
        let (order, _) = self.bfs_order(0);
        let far = *order.last().unwrap();
        let (order, parent) = self.bfs_order(far);
        let mut v = *order.last().unwrap();
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    }
}

fn bfs(adj: &[Vec<Vertex>], source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}
