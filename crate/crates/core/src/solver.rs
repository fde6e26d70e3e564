//! Ground truth for small trees: coloring verification, the minimal coloring
//! compatible with a fixed vertex line-up, and exact `hc` by branch and
//! bound over line-ups.
//!
//! Every constraint is a lower bound on the gap between two colors, so once
//! the sorted order of colors is fixed the greedy assignment
//! `h(x_{i+1}) = max_{j≤i} h(x_j) + max(0, n−1−D(x_j, x_{i+1}))` is pointwise
//! minimal. Minimising over all orders therefore gives `hc`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordering::{Coloring, Ordering};
use crate::par::with_threads;
use crate::rooted::RootedView;
use crate::tree::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    /// `n − 1 − D(u, v)`
    pub required: u64,
    /// `|h(u) − h(v)|`
    pub actual: u64,
}

/// All pairs violating `D(u,v) + |h(u) − h(v)| ≥ n − 1`. Empty means valid.
pub fn verify_coloring(rv: &RootedView, c: &Coloring) -> Result<Vec<Violation>> {
    let n = rv.order();
    if c.len() != n {
        return Err(Error::IncompleteColoring { n, got: c.len() });
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let required = (n - 1).saturating_sub(rv.detour_unchecked(u, v)) as u64;
            let actual = c.color(u).abs_diff(c.color(v));
            if actual < required {
                out.push(Violation { u, v, required, actual });
            }
        }
    }
    Ok(out)
}

/// Greedy minimal coloring whose sorted order refines `o`.
pub fn min_span_for_order(rv: &RootedView, o: &Ordering) -> Result<Coloring> {
    let n = rv.order();
    if o.len() != n {
        return Err(Error::NotAPermutation { n, msg: format!("ordering has {} entries", o.len()) });
    }
    let table = Table::new(rv);
    let s = o.as_slice();
    let mut by_pos = Vec::with_capacity(n);
    for (i, &v) in s.iter().enumerate() {
        by_pos.push(table.next_color(&s[..i], &by_pos, v));
    }
    let mut colors = vec![0; n];
    for (i, &v) in s.iter().enumerate() {
        colors[v] = by_pos[i];
    }
    Ok(Coloring::new(colors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest order accepted.
    pub limit: usize,
    /// Node cap; `None` searches to completion.
    pub budget: Option<u64>,
    /// Worker threads; 1 runs the sequential search.
    pub threads: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { limit: 10, budget: None, threads: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub hc: u64,
    pub witness: Coloring,
    pub ordering: Ordering,
    pub explored: u64,
    /// The budget ran out; `hc` is only an upper bound.
    pub limit_hit: bool,
}

struct Table {
    n: usize,
    req: Vec<u64>,
    min_gap: u64,
}

impl Table {
    fn new(rv: &RootedView) -> Table {
        let n = rv.order();
        let req = rv
            .distance_matrix()
            .into_iter()
            .map(|d| (n - 1).saturating_sub(d) as u64)
            .collect();
        let min_gap = (n - 1).saturating_sub(rv.tree().diameter()) as u64;
        Table { n, req, min_gap }
    }

    fn req(&self, a: Vertex, b: Vertex) -> u64 {
        self.req[a * self.n + b]
    }

    fn next_color(&self, placed: &[Vertex], colors: &[u64], v: Vertex) -> u64 {
        placed
            .iter()
            .zip(colors)
            .map(|(&u, &h)| h + self.req(u, v))
            .max()
            .unwrap_or(0)
    }
}

struct Shared<'a> {
    incumbent: Option<&'a AtomicU64>,
    nodes: &'a AtomicU64,
    budget: u64,
    stop: &'a AtomicBool,
}

struct Worker {
    order: Vec<Vertex>,
    colors: Vec<u64>,
    used: Vec<bool>,
    best_span: u64,
    best: Option<Vec<Vertex>>,
    explored: u64,
}

impl Worker {
    fn new(n: usize, best_span: u64) -> Worker {
        Worker {
            order: Vec::with_capacity(n),
            colors: Vec::with_capacity(n),
            used: vec![false; n],
            best_span,
            best: None,
            explored: 0,
        }
    }
}

const FLUSH: u64 = 4096;

fn pruned(w: &Worker, shared: &Shared, bound: u64) -> bool {
    bound >= w.best_span
        || shared
            .incumbent
            .is_some_and(|s| bound > s.load(AtomicOrdering::Relaxed))
}

/// Counts a node; false once the budget is spent.
fn tick(w: &mut Worker, shared: &Shared) -> bool {
    w.explored += 1;
    if w.explored.is_multiple_of(FLUSH) {
        let total = shared.nodes.fetch_add(FLUSH, AtomicOrdering::Relaxed) + FLUSH;
        if total > shared.budget {
            shared.stop.store(true, AtomicOrdering::Relaxed);
        }
    }
    if shared.incumbent.is_none() && w.explored > shared.budget {
        shared.stop.store(true, AtomicOrdering::Relaxed);
    }
    !shared.stop.load(AtomicOrdering::Relaxed)
}

fn dfs(t: &Table, w: &mut Worker, shared: &Shared) {
    let n = t.n;
    let k = w.order.len();
    if k == n {
        let span = w.colors[n - 1];
        w.best_span = span;
        w.best = Some(w.order.clone());
        if let Some(s) = shared.incumbent {
            s.fetch_min(span, AtomicOrdering::Relaxed);
        }
        return;
    }
    for v in 0..n {
        if w.used[v] {
            continue;
        }
        let h = t.next_color(&w.order, &w.colors, v);
        let bound = h + (n - k - 1) as u64 * t.min_gap;
        if pruned(w, shared, bound) {
            continue;
        }
        if !tick(w, shared) {
            return;
        }
        w.used[v] = true;
        w.order.push(v);
        w.colors.push(h);
        dfs(t, w, shared);
        w.colors.pop();
        w.order.pop();
        w.used[v] = false;
        if shared.stop.load(AtomicOrdering::Relaxed) {
            return;
        }
    }
}

/// Exact `hc` by depth-first search over vertex line-ups with incumbent
/// pruning. The witness is the lexicographically first optimal line-up,
/// identical for sequential and parallel runs when the search completes.
///
/// With `threads > 1` the first two positions are split across workers that
/// share the incumbent span. The node budget is exact in sequential runs and
/// approximate (flushed in batches) in parallel ones.
pub fn exact_hc(rv: &RootedView, cfg: &ExactConfig) -> Result<ExactResult> {
    let n = rv.order();
    if n > cfg.limit {
        return Err(Error::TooLarge { n, limit: cfg.limit });
    }
    let seed_order = Ordering::identity(n);
    let seed = min_span_for_order(rv, &seed_order)?;
    if n <= 2 {
        return Ok(ExactResult {
            hc: seed.span(),
            witness: seed,
            ordering: seed_order,
            explored: 0,
            limit_hit: false,
        });
    }
    let table = Table::new(rv);
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let budget = cfg.budget.unwrap_or(u64::MAX);

    let (best, explored) = with_threads(cfg.threads, |parallel| {
        if parallel {
            run_parallel(&table, seed.span(), &seed_order, &nodes, budget, &stop)
        } else {
            let shared = Shared { incumbent: None, nodes: &nodes, budget, stop: &stop };
            let mut w = Worker::new(n, seed.span());
            dfs(&table, &mut w, &shared);
            let best = w.best.map(Ordering::new).transpose().unwrap();
            (best.unwrap_or(seed_order.clone()), w.explored)
        }
    });

    let witness = min_span_for_order(rv, &best)?;
    Ok(ExactResult {
        hc: witness.span(),
        witness,
        ordering: best,
        explored,
        limit_hit: stop.load(AtomicOrdering::Relaxed),
    })
}

#[cfg(feature = "parallel")]
fn run_parallel(
    t: &Table,
    seed_span: u64,
    seed_order: &Ordering,
    nodes: &AtomicU64,
    budget: u64,
    stop: &AtomicBool,
) -> (Ordering, u64) {
    use rayon::prelude::*;

    let n = t.n;
    let incumbent = AtomicU64::new(seed_span);
    let tasks: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    // (best span and line-up found by the task, nodes explored)
    type TaskResult = (Option<(u64, Vec<Vertex>)>, u64);
    let results: Vec<TaskResult> = tasks
        .par_iter()
        .map(|&(a, b)| {
            let shared = Shared { incumbent: Some(&incumbent), nodes, budget, stop };
            let mut w = Worker::new(n, u64::MAX);
            let h = t.req(a, b);
            if pruned(&w, &shared, h + (n - 2) as u64 * t.min_gap) || stop.load(AtomicOrdering::Relaxed) {
                return (None, 0);
            }
            w.explored = 2;
            w.used[a] = true;
            w.used[b] = true;
            w.order.extend([a, b]);
            w.colors.extend([0, h]);
            dfs(t, &mut w, &shared);
            nodes.fetch_add(w.explored % FLUSH, AtomicOrdering::Relaxed);
            (w.best.map(|o| (w.best_span, o)), w.explored)
        })
        .collect();

    let explored = results.iter().map(|r| r.1).sum();
    let best = results
        .into_iter()
        .filter_map(|r| r.0)
        .chain(std::iter::once((seed_span, seed_order.as_slice().to_vec())))
        .min()
        .unwrap();
    (Ordering::new(best.1).unwrap(), explored)
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(
    _t: &Table,
    _seed_span: u64,
    _seed_order: &Ordering,
    _nodes: &AtomicU64,
    _budget: u64,
    _stop: &AtomicBool,
) -> (Ordering, u64) {
    unreachable!("parallel search requested in a sequential build")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rooted::analyze;
    use crate::tree::Tree;

    fn star(n: usize) -> RootedView {
        let edges: Vec<_> = (1..n).map(|l| (0, l)).collect();
        analyze(&Tree::new(n, &edges).unwrap())
    }

    fn p4() -> RootedView {
        analyze(&Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap())
    }

    #[test]
    fn verify_star() {
        let rv = star(4);
        assert!(verify_coloring(&rv, &Coloring::new(vec![0, 2, 3, 4])).unwrap().is_empty());
        let bad = verify_coloring(&rv, &Coloring::new(vec![0, 1, 3, 5])).unwrap();
        assert_eq!(bad, vec![Violation { u: 0, v: 1, required: 2, actual: 1 }]);
        assert!(matches!(
            verify_coloring(&rv, &Coloring::new(vec![0, 1])),
            Err(Error::IncompleteColoring { n: 4, got: 2 })
        ));
        let k2 = analyze(&Tree::new(2, &[(0, 1)]).unwrap());
        assert!(verify_coloring(&k2, &Coloring::new(vec![0, 0])).unwrap().is_empty());
    }

    #[test]
    fn fixed_order() {
        // P_4 = a-b-c-d with a=0; order (b, d, a, c)
        let c = min_span_for_order(&p4(), &Ordering::new(vec![1, 3, 0, 2]).unwrap()).unwrap();
        assert_eq!(c.colors(), &[2, 0, 3, 1]);
        assert_eq!(c.span(), 3);
        let c = min_span_for_order(&star(4), &Ordering::identity(4)).unwrap();
        assert_eq!(c.span(), 4);
        let k2 = analyze(&Tree::new(2, &[(0, 1)]).unwrap());
        assert_eq!(min_span_for_order(&k2, &Ordering::new(vec![1, 0]).unwrap()).unwrap().span(), 0);
    }

    #[test]
    fn exact_small() {
        let cfg = ExactConfig::default();
        assert_eq!(exact_hc(&p4(), &cfg).unwrap().hc, 3);
        let r = exact_hc(&star(5), &cfg).unwrap();
        assert_eq!(r.hc, 9);
        assert!(!r.limit_hit);
        assert!(verify_coloring(&star(5), &r.witness).unwrap().is_empty());
    }

    #[test]
    fn exact_limits() {
        let cfg = ExactConfig { limit: 4, ..Default::default() };
        assert!(matches!(exact_hc(&star(5), &cfg), Err(Error::TooLarge { n: 5, limit: 4 })));
        let cfg = ExactConfig { budget: Some(3), ..Default::default() };
        let r = exact_hc(&star(6), &cfg).unwrap();
        assert!(r.limit_hit);
        assert!(r.hc >= 16);
        assert!(verify_coloring(&star(6), &r.witness).unwrap().is_empty());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let seq = exact_hc(&star(7), &ExactConfig::default()).unwrap();
        let par = exact_hc(&star(7), &ExactConfig { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(seq.hc, par.hc);
        assert_eq!(seq.ordering, par.ordering);
    }
}
