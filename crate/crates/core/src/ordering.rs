//! Vertex orderings, the colorings they induce, and the checks that certify
//! an ordering attains `lb_W(T)`.
//!
//! A hamiltonian coloring of a tree with a vertex of degree 3 is injective, so
//! it lines the vertices up as `x_0, …, x_{n−1}` by increasing color. The
//! lower bound is attained exactly when some line-up satisfies the pairwise
//! inequality checked by [`check_theorem2`]; [`check_theorem3`] and
//! [`check_corollary1`] are cheaper local conditions that imply it.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bounds::{is_applicable, is_db_half, lower_bound_weight};
use crate::error::{Error, Result};
use crate::rooted::RootedView;
use crate::tree::Vertex;

/// A permutation `x_0 … x_{n−1}` of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Ordering(Vec<Vertex>);

impl Ordering {
    pub fn new(seq: Vec<Vertex>) -> Result<Ordering> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n {
                return Err(Error::NotAPermutation { n, msg: format!("id {v} out of range") });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation { n, msg: format!("id {v} repeated") });
            }
        }
        Ok(Ordering(seq))
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Ordering {
        Ordering(self.0.iter().rev().copied().collect())
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::NotAPermutation {
                n,
                msg: format!("ordering has {} entries", self.0.len()),
            })
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A total vertex coloring with non-negative integer colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<u64>,
}

impl Coloring {
    pub fn new(colors: Vec<u64>) -> Coloring {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> u64 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn span(&self) -> u64 {
        match (self.colors.iter().min(), self.colors.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.colors.len());
        self.colors.iter().all(|c| seen.insert(*c))
    }

    /// Vertices sorted by color, ties by vertex id.
    pub fn induced_ordering(&self) -> Ordering {
        let mut seq: Vec<Vertex> = (0..self.colors.len()).collect();
        seq.sort_by_key(|&v| (self.colors[v], v));
        Ordering(seq)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Theorem2,
    Corollary1,
    Theorem3,
    None,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Theorem2 => "theorem2",
            CertificateKind::Corollary1 => "corollary1",
            CertificateKind::Theorem3 => "theorem3",
            CertificateKind::None => "none",
        })
    }
}

/// Outcome of certifying an ordering. When `kind` is not `None`,
/// `claimed_span` is `lb_W(T)` and the coloring synthesized from the
/// ordering is optimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub ordering: Ordering,
    pub claimed_span: Option<i64>,
    pub reason: Option<String>,
}

impl Certificate {
    fn none(o: &Ordering, reason: impl Into<String>) -> Certificate {
        Certificate {
            kind: CertificateKind::None,
            ordering: o.clone(),
            claimed_span: None,
            reason: Some(reason.into()),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.kind != CertificateKind::None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Theorem2Violation {
    /// Endpoint levels do not sum to ζ′.
    Endpoints { first_level: usize, last_level: usize },
    /// `D(x_i, x_j)` falls short of the required value.
    Pair { i: usize, j: usize, distance: usize, required: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Check {
    pub violation: Option<Theorem2Violation>,
}

impl Theorem2Check {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Endpoint condition in sum form: `𝓛(x_0) + 𝓛(x_{n−1}) = ζ′`.
fn endpoints_ok(rv: &RootedView, o: &Ordering) -> bool {
    let s = o.as_slice();
    rv.level(s[0]) + rv.level(s[s.len() - 1]) == rv.zeta_prime() as usize
}

/// Endpoint condition in the literal form: `𝓛(x_0) = 0` and
/// `𝓛(x_{n−1}) = ζ′`.
pub fn endpoints_strict(rv: &RootedView, o: &Ordering) -> bool {
    let s = o.as_slice();
    s.len() == rv.order()
        && rv.level(s[0]) == 0
        && rv.level(s[s.len() - 1]) == rv.zeta_prime() as usize
}

/// Checks the endpoint levels (sum form) and, for every `i < j`,
/// `D(x_i,x_j) ≥ Σ_{t=i}^{j−1}(𝓛(x_t)+𝓛(x_{t+1})) − (j−i)(n−1−ζ) + (n−1)`.
/// Reports the first violation found.
pub fn check_theorem2(rv: &RootedView, o: &Ordering) -> Result<Theorem2Check> {
    let n = rv.order();
    o.check_len(n)?;
    if !is_applicable(rv.tree()) {
        return Err(Error::NotApplicable(
            "ordering conditions require n >= 4 and max degree >= 3".into(),
        ));
    }
    let s = o.as_slice();
    if !endpoints_ok(rv, o) {
        return Ok(Theorem2Check {
            violation: Some(Theorem2Violation::Endpoints {
                first_level: rv.level(s[0]),
                last_level: rv.level(s[n - 1]),
            }),
        });
    }
    // prefix[k] = Σ_{t<k} (𝓛(x_t) + 𝓛(x_{t+1}))
    let mut prefix = vec![0i64; n];
    for k in 1..n {
        prefix[k] = prefix[k - 1] + (rv.level(s[k - 1]) + rv.level(s[k])) as i64;
    }
    let step = (n - 1) as i64 - rv.zeta() as i64;
    for i in 0..n {
        for j in i + 1..n {
            let required = prefix[j] - prefix[i] - (j - i) as i64 * step + (n - 1) as i64;
            let distance = rv.detour_unchecked(s[i], s[j]);
            if (distance as i64) < required {
                return Ok(Theorem2Check {
                    violation: Some(Theorem2Violation::Pair { i, j, distance, required }),
                });
            }
        }
    }
    Ok(Theorem2Check { violation: None })
}

/// `n − 1 − ζ − 𝓛(a) − 𝓛(b)`, the color gap between consecutive vertices;
/// `None` when negative.
pub(crate) fn color_gap(n: usize, zeta: u8, level_a: usize, level_b: usize) -> Option<u64> {
    ((n as i64) - 1 - zeta as i64 - level_a as i64 - level_b as i64)
        .try_into()
        .ok()
}

/// `h(x_0) = 0`, `h(x_{i+1}) = h(x_i) + n − 1 − ζ − 𝓛(x_i) − 𝓛(x_{i+1})`.
pub fn coloring_from_ordering(rv: &RootedView, o: &Ordering) -> Result<Coloring> {
    let n = rv.order();
    o.check_len(n)?;
    let s = o.as_slice();
    let mut colors = vec![0u64; n];
    let mut h = 0u64;
    for i in 0..n.saturating_sub(1) {
        let gap = color_gap(n, rv.zeta(), rv.level(s[i]), rv.level(s[i + 1]))
            .ok_or(Error::NegativeIncrement { position: i })?;
        h += gap;
        colors[s[i + 1]] = h;
    }
    Ok(Coloring::new(colors))
}

fn local_conditions(rv: &RootedView, o: &Ordering, pairwise_bound: bool) -> std::result::Result<(), String> {
    let n = rv.order();
    if o.len() != n {
        return Err(format!("ordering has {} entries, tree has {n}", o.len()));
    }
    if !is_applicable(rv.tree()) {
        return Err("requires n >= 4 and max degree >= 3".into());
    }
    if !endpoints_ok(rv, o) {
        return Err(format!(
            "endpoint levels sum to {}, expected {}",
            rv.level(o.0[0]) + rv.level(o.0[n - 1]),
            rv.zeta_prime()
        ));
    }
    for (i, w) in o.0.windows(2).enumerate() {
        if !rv.alternates(w[0], w[1]) {
            let want = if rv.zeta() == 1 { "opposite" } else { "different" };
            return Err(format!(
                "x_{i} = {} and x_{} = {} are not in {want} branches",
                w[0],
                i + 1,
                w[1]
            ));
        }
        if pairwise_bound && 2 * rv.detour_unchecked(w[0], w[1]) > n {
            return Err(format!(
                "D(x_{i}, x_{}) = {} exceeds n/2",
                i + 1,
                rv.detour_unchecked(w[0], w[1])
            ));
        }
    }
    Ok(())
}

fn certified(rv: &RootedView, o: &Ordering, kind: CertificateKind) -> Certificate {
    match lower_bound_weight(rv, false) {
        Ok(lb) => Certificate {
            kind,
            ordering: o.clone(),
            claimed_span: Some(lb),
            reason: None,
        },
        Err(e) => Certificate::none(o, e.to_string()),
    }
}

/// Endpoint levels and branch alternation on a tree with diameter at most `n/2`.
pub fn check_corollary1(rv: &RootedView, o: &Ordering) -> Certificate {
    if !is_db_half(rv) {
        return Certificate::none(o, "diameter exceeds n/2");
    }
    match local_conditions(rv, o, false) {
        Ok(()) => certified(rv, o, CertificateKind::Corollary1),
        Err(reason) => Certificate::none(o, reason),
    }
}

/// Endpoint levels, branch alternation and `D(x_i, x_{i+1}) ≤ n/2`.
pub fn check_theorem3(rv: &RootedView, o: &Ordering) -> Certificate {
    match local_conditions(rv, o, true) {
        Ok(()) => certified(rv, o, CertificateKind::Theorem3),
        Err(reason) => Certificate::none(o, reason),
    }
}

/// Strongest certificate available for `o`: [`check_corollary1`], then
/// [`check_theorem3`], then the full pairwise check.
pub fn certify(rv: &RootedView, o: &Ordering) -> Certificate {
    let c = check_corollary1(rv, o);
    if c.is_certified() {
        return c;
    }
    let c = check_theorem3(rv, o);
    if c.is_certified() {
        return c;
    }
    match check_theorem2(rv, o) {
        Ok(check) if check.holds() => certified(rv, o, CertificateKind::Theorem2),
        Ok(check) => Certificate::none(o, format!("{:?}", check.violation.unwrap())),
        Err(e) => Certificate::none(o, e.to_string()),
    }
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

pub fn search_ordering(rv: &RootedView) -> Result<Ordering> {
    search_ordering_with_budget(rv, DEFAULT_SEARCH_BUDGET)
}

/// Vertices of one branch at one level; interchangeable for the local
/// conditions.
struct Class {
    branch: usize,
    side: Vertex,
    level: usize,
    vertices: Vec<Vertex>,
}

struct Search<'a> {
    rv: &'a RootedView,
    classes: Vec<Class>,
    counts: Vec<u32>,
    branch_left: Vec<u32>,
    path: Vec<usize>,
    failed: HashSet<(Vec<u32>, usize)>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

const CENTER: usize = usize::MAX;

impl Search<'_> {
    fn prev_level(&self, prev: usize) -> usize {
        if prev == CENTER { 0 } else { self.classes[prev].level }
    }

    fn compatible(&self, prev: usize, c: usize) -> bool {
        let class = &self.classes[c];
        let n = self.rv.order();
        let zeta = self.rv.zeta() as usize;
        let ok_branch = if prev == CENTER {
            // x_0 is the first weight center; with two centers x_1 must sit
            // on the other side.
            zeta == 0 || class.side != self.rv.weight_centers()[0]
        } else if zeta == 1 {
            self.classes[prev].side != class.side
        } else {
            self.classes[prev].branch != class.branch
        };
        ok_branch && 2 * (self.prev_level(prev) + class.level + zeta) <= n
    }

    fn finish_ok(&self, prev: usize) -> bool {
        let n = self.rv.order();
        if self.rv.zeta() == 1 {
            // x_{n-1} is the second weight center
            2 * (self.prev_level(prev) + 1) <= n
        } else {
            self.prev_level(prev) == 1
        }
    }

    fn dfs(&mut self, prev: usize, remaining: u32) -> bool {
        if remaining == 0 {
            return self.finish_ok(prev);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        if self.rv.zeta() == 0 {
            let max = *self.branch_left.iter().max().unwrap();
            if max > remaining - max + 1 {
                return false;
            }
        }
        let key = (self.counts.clone(), prev);
        if self.failed.contains(&key) {
            return false;
        }

        let mut candidates: Vec<usize> = (0..self.classes.len())
            .filter(|&c| self.counts[c] > 0 && self.compatible(prev, c))
            .collect();
        candidates.sort_by_key(|&c| {
            let class = &self.classes[c];
            (
                std::cmp::Reverse(self.branch_left[class.branch]),
                class.branch,
                std::cmp::Reverse(class.level),
            )
        });
        for c in candidates {
            let b = self.classes[c].branch;
            self.counts[c] -= 1;
            self.branch_left[b] -= 1;
            self.path.push(c);
            if self.dfs(c, remaining - 1) {
                return true;
            }
            self.path.pop();
            self.counts[c] += 1;
            self.branch_left[b] += 1;
            if self.exhausted {
                return false;
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Greedy construction of an ordering satisfying the endpoint, alternation
/// and `n/2` conditions, backed by a memoized depth-first search.
///
/// Starts at the (first) weight center and repeatedly moves to an allowed
/// branch with the most unplaced vertices (ties: smaller branch id), taking
/// its deepest admissible vertex. If the greedy line-up gets stuck the search
/// backtracks in the same preference order, up to `budget` nodes. Failure is
/// not a proof that `hc(T) > lb_W(T)`.
pub fn search_ordering_with_budget(rv: &RootedView, budget: u64) -> Result<Ordering> {
    let n = rv.order();
    if !is_applicable(rv.tree()) {
        return Err(Error::NotApplicable(
            "ordering search requires n >= 4 and max degree >= 3".into(),
        ));
    }
    let mut classes: Vec<Class> = Vec::new();
    for v in 0..n {
        let Some(branch) = rv.branch(v) else { continue };
        let level = rv.level(v);
        match classes.iter_mut().find(|c| c.branch == branch && c.level == level) {
            Some(c) => c.vertices.push(v),
            None => classes.push(Class { branch, side: rv.side(v), level, vertices: vec![v] }),
        }
    }
    let mut branch_left = vec![0u32; rv.branch_count()];
    for c in &classes {
        branch_left[c.branch] += c.vertices.len() as u32;
    }
    let counts = classes.iter().map(|c| c.vertices.len() as u32).collect();
    let total = (n - rv.weight_centers().len()) as u32;
    let mut search = Search {
        rv,
        classes,
        counts,
        branch_left,
        path: Vec::with_capacity(n),
        failed: HashSet::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    if !search.dfs(CENTER, total) {
        let why = if search.exhausted {
            format!("node budget {budget} exhausted")
        } else {
            "no ordering satisfies the endpoint, alternation and n/2 conditions".into()
        };
        return Err(Error::SearchFailed(why));
    }

    let mut pools: Vec<std::collections::VecDeque<Vertex>> = search
        .classes
        .iter()
        .map(|c| c.vertices.iter().copied().collect())
        .collect();
    let mut seq = Vec::with_capacity(n);
    seq.push(rv.weight_centers()[0]);
    for &c in &search.path {
        seq.push(pools[c].pop_front().unwrap());
    }
    if rv.zeta() == 1 {
        seq.push(rv.weight_centers()[1]);
    }
    let o = Ordering::new(seq)?;
    debug_assert!(check_theorem3(rv, &o).is_certified());
    Ok(o)
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

    fn broom(n: usize, d: usize) -> RootedView {
        let mut edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
        edges.extend((d..n).map(|l| (0, l)));
        analyze(&Tree::new(n, &edges).unwrap())
    }

    fn ord(v: &[usize]) -> Ordering {
        Ordering::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Ordering::new(vec![0, 2, 1]).is_ok());
        assert!(matches!(Ordering::new(vec![0, 0, 1]), Err(Error::NotAPermutation { .. })));
        assert!(matches!(Ordering::new(vec![0, 3, 1]), Err(Error::NotAPermutation { .. })));
    }

    #[test]
    fn star_theorem2() {
        let rv = star(5);
        assert!(check_theorem2(&rv, &ord(&[0, 1, 2, 3, 4])).unwrap().holds());
        let bad = check_theorem2(&rv, &ord(&[1, 0, 2, 3, 4])).unwrap();
        assert!(matches!(bad.violation, Some(Theorem2Violation::Endpoints { .. })));
        assert!(check_theorem2(&rv, &ord(&[0, 1, 2])).is_err());
    }

    #[test]
    fn star_colorings() {
        let c = coloring_from_ordering(&star(4), &ord(&[0, 1, 2, 3])).unwrap();
        assert_eq!(c.colors(), &[0, 2, 3, 4]);
        assert_eq!(c.span(), 4);
        let c = coloring_from_ordering(&star(5), &ord(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(c.span(), 9);
    }

    #[test]
    fn gap_guard() {
        assert_eq!(color_gap(4, 1, 1, 1), Some(0));
        assert_eq!(color_gap(4, 1, 2, 1), None);
        assert_eq!(color_gap(5, 0, 1, 1), Some(2));
    }

    #[test]
    fn local_certificates() {
        let rv = broom(6, 3);
        // hub, path 1, leaf 3, path 2, leaf 4, leaf 5
        let o = ord(&[0, 1, 3, 2, 4, 5]);
        let c = check_corollary1(&rv, &o);
        assert_eq!(c.kind, CertificateKind::Corollary1);
        assert_eq!(c.claimed_span, Some(14));
        assert!(check_theorem3(&rv, &o).is_certified());
        assert_eq!(coloring_from_ordering(&rv, &o).unwrap().span(), 14);

        // 1 and 2 share the path branch
        let same = ord(&[0, 3, 1, 2, 4, 5]);
        assert!(!check_theorem3(&rv, &same).is_certified());

        let p4 = analyze(&Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert!(!check_corollary1(&p4, &ord(&[1, 0, 3, 2])).is_certified());
    }

    #[test]
    fn search_star_and_broom() {
        for n in 4..=8 {
            let rv = star(n);
            let o = search_ordering(&rv).unwrap();
            assert_eq!(coloring_from_ordering(&rv, &o).unwrap().span(), ((n - 2) * (n - 2)) as u64);
        }
        let rv = broom(10, 4);
        let o = search_ordering(&rv).unwrap();
        assert!(check_theorem3(&rv, &o).is_certified());
        assert_eq!(coloring_from_ordering(&rv, &o).unwrap().span(), 58);
    }

    #[test]
    fn search_fails_on_long_leg_spider() {
        // hub 0 with legs of length 1, 1 and 5
        let rv = broom(8, 6);
        assert!(matches!(search_ordering(&rv), Err(Error::SearchFailed(_))));
        assert!(matches!(
            search_ordering(&analyze(&Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap())),
            Err(Error::NotApplicable(_))
        ));
    }
}
