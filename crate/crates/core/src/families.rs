//! Generators for stars, brooms, the `A_d` trees and caterpillars, with
//! their closed-form orders, total levels and hamiltonian chromatic numbers.
//!
//! Vertex id layouts:
//! - star `K_{1,n−1}`: hub 0, leaves `1..n`.
//! - broom `B_{n,d}`: path `0..d` with 0 as the hub end, leaves `d..n` on 0.
//! - `A_d`: `A_2` is the edge 0-1, `A_3` is hub 0 with leaves 1..=4 (ends 1
//!   and 2). Each growth step walks the current leaves in ascending id order;
//!   each of the two path ends gets three children (the first becomes the new
//!   end), every other leaf gets one.
//! - caterpillar `C(m,d)`: spine `0..m`, then `d−2` legs per inner spine
//!   vertex in spine order.

use std::fmt;

use serde::Serialize;

use crate::bounds::is_applicable;
use crate::error::{Error, Result};
use crate::ordering::{certify, search_ordering, Ordering};
use crate::rooted::RootedView;
use crate::tree::{Tree, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Star { n: u64 },
    /// A broom that is not one of the `B_d` instances.
    Broom { n: u64, d: u64 },
    /// `B_{2k} = B_{k(2k+1), 2k}`.
    BroomEven { k: u64 },
    /// `B_{2k+1} = B_{(k+1)(2k+1), 2k+1}`.
    BroomOdd { k: u64 },
    ATree { d: u64 },
    Caterpillar { m: u64, d: u64 },
}

impl Family {
    /// CLI family name.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Star { .. } => "star",
            Family::Broom { .. } | Family::BroomEven { .. } | Family::BroomOdd { .. } => "broom",
            Family::ATree { .. } => "a-tree",
            Family::Caterpillar { .. } => "caterpillar",
        }
    }

    /// CLI parameter string that regenerates this instance.
    pub fn params(&self) -> String {
        match *self {
            Family::Star { n } => format!("n={n}"),
            Family::Broom { n, d } => format!("n={n},d={d}"),
            Family::BroomEven { k } => format!("n={},d={}", k * (2 * k + 1), 2 * k),
            Family::BroomOdd { k } => format!("n={},d={}", (k + 1) * (2 * k + 1), 2 * k + 1),
            Family::ATree { d } => format!("d={d}"),
            Family::Caterpillar { m, d } => format!("m={m},d={d}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Star { n } => write!(f, "K_{{1,{}}}", n - 1),
            Family::Broom { n, d } => write!(f, "B_{{{n},{d}}}"),
            Family::BroomEven { k } => write!(f, "B_{}", 2 * k),
            Family::BroomOdd { k } => write!(f, "B_{}", 2 * k + 1),
            Family::ATree { d } => write!(f, "A_{d}"),
            Family::Caterpillar { m, d } => write!(f, "C({m},{d})"),
        }
    }
}

/// A generated instance with its closed-form values. `expected_hc` and
/// `expected_total_level` are `None` for plain brooms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub expected_n: u64,
    pub expected_hc: Option<i64>,
    pub expected_total_level: Option<u64>,
}

fn exact_div(num: i128, den: i128) -> i128 {
    debug_assert_eq!(num % den, 0, "closed form {num}/{den} is not integral");
    num / den
}

fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("closed form"))
}

fn family_n(family: &Family) -> u64 {
    match *family {
        Family::Star { n } | Family::Broom { n, .. } => n,
        Family::BroomEven { k } => k * (2 * k + 1),
        Family::BroomOdd { k } => (k + 1) * (2 * k + 1),
        Family::ATree { d } => {
            let k = d / 2;
            if d % 2 == 0 { 2 * k * k } else { 2 * k * (k + 1) + 1 }
        }
        Family::Caterpillar { m, d } => {
            let k = m / 2;
            if m % 2 == 1 { (2 * k - 1) * (d - 1) + 2 } else { 2 * k * (d - 1) - 2 * (d - 2) }
        }
    }
}

fn family_total_level(family: &Family) -> Option<u64> {
    let v = match *family {
        Family::Star { n } => n - 1,
        Family::Broom { .. } => return None,
        Family::BroomEven { k } => 2 * k * (2 * k - 1),
        Family::BroomOdd { k } => 2 * k * (2 * k + 1),
        Family::ATree { d } => {
            let k = d / 2;
            if d % 2 == 0 {
                k * (k - 1) * (4 * k + 1) / 3
            } else {
                2 * k * (k + 1) * (2 * k + 1) / 3
            }
        }
        Family::Caterpillar { m, d } => {
            let k = m / 2;
            if m % 2 == 1 { (k * (k + 1) - 1) * (d - 1) + 1 } else { k * (k - 1) * (d - 1) }
        }
    };
    Some(v)
}

/// Closed-form `hc` of a family instance.
///
/// For `A_{2k+1}` this is `(4/3)k(k+1)(3k²+k−1) + 1`, the value obtained by
/// substituting the order and total level into `lb_W`.
pub fn closed_form_hc(family: &Family) -> Result<i64> {
    validate(family)?;
    let v: i128 = match *family {
        Family::Star { n } => {
            let n = n as i128;
            (n - 2) * (n - 2)
        }
        Family::Broom { n, d } => {
            return Err(Error::BadParams(format!(
                "B_{{{n},{d}}} is not a B_{{2k}} or B_{{2k+1}} instance; no closed form"
            )))
        }
        Family::BroomEven { k } => {
            // 2k(2k³ + 2k² − 11k/2 + 1) + 2
            let k = k as i128;
            4 * k.pow(4) + 4 * k.pow(3) - 11 * k * k + 2 * k + 2
        }
        Family::BroomOdd { k } => {
            let k = k as i128;
            (2 * k + 1) * (2 * k.pow(3) + 5 * k * k - 2 * k - 1) + 2
        }
        Family::ATree { d } => {
            let k = (d / 2) as i128;
            if d % 2 == 0 {
                exact_div(2 * (k - 1) * (6 * k.pow(3) + 2 * k * k - 4 * k - 3), 3)
            } else {
                exact_div(4 * k * (k + 1) * (3 * k * k + k - 1), 3) + 1
            }
        }
        Family::Caterpillar { m, d } => {
            let n = family_n(family) as i128;
            let d = d as i128;
            let base = (2 * d - 3) * (n - 2) * (n - 2);
            if m % 2 == 1 {
                exact_div(base + (d - 1) * (d - 1), 2 * d - 2)
            } else {
                exact_div(base, 2 * d - 2)
            }
        }
    };
    to_i64(v)
}

fn validate(family: &Family) -> Result<()> {
    let bad = |msg: String| Err(Error::BadParams(msg));
    match *family {
        Family::Star { n } if n < 3 => bad(format!("star needs n >= 3, got {n}")),
        Family::Broom { n, d } if !(n > d && d >= 2) => {
            bad(format!("broom needs n > d >= 2, got n={n}, d={d}"))
        }
        Family::BroomEven { k } | Family::BroomOdd { k } if k < 1 => bad("k must be >= 1".into()),
        Family::ATree { d } if d < 2 => bad(format!("A_d needs d >= 2, got {d}")),
        Family::Caterpillar { m, d } if m < 3 || d < 3 => {
            bad(format!("caterpillar needs m >= 3 and d >= 3, got m={m}, d={d}"))
        }
        _ => Ok(()),
    }
}

fn spec_for(family: Family) -> Result<FamilySpec> {
    let expected_hc = match family {
        Family::Broom { .. } => None,
        f => Some(closed_form_hc(&f)?),
    };
    Ok(FamilySpec {
        family,
        expected_n: family_n(&family),
        expected_hc,
        expected_total_level: family_total_level(&family),
    })
}

fn usize_of(x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::BadParams(format!("{x} is too large")))
}

pub fn gen_star(n: u64) -> Result<(Tree, FamilySpec)> {
    let family = Family::Star { n };
    validate(&family)?;
    let n = usize_of(n)?;
    let edges: Vec<_> = (1..n).map(|l| (0, l)).collect();
    Ok((Tree::new(n, &edges)?, spec_for(family)?))
}

/// `B_{n,d}`; recognised as `B_{2k}` / `B_{2k+1}` when `(n, d)` matches.
pub fn gen_broom(n: u64, d: u64) -> Result<(Tree, FamilySpec)> {
    validate(&Family::Broom { n, d })?;
    let k = d / 2;
    let family = if d.is_multiple_of(2) && n == k * (2 * k + 1) {
        Family::BroomEven { k }
    } else if d % 2 == 1 && n == (k + 1) * (2 * k + 1) {
        Family::BroomOdd { k }
    } else {
        Family::Broom { n, d }
    };
    let (n, d) = (usize_of(n)?, usize_of(d)?);
    let mut edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
    edges.extend((d..n).map(|l| (0, l)));
    Ok((Tree::new(n, &edges)?, spec_for(family)?))
}

/// `B_d` for `d ≥ 2`.
pub fn gen_broom_d(d: u64) -> Result<(Tree, FamilySpec)> {
    if d < 2 {
        return Err(Error::BadParams(format!("B_d needs d >= 2, got {d}")));
    }
    let k = d / 2;
    let n = if d.is_multiple_of(2) { k * (2 * k + 1) } else { (k + 1) * (2 * k + 1) };
    gen_broom(n, d)
}

pub fn gen_a_tree(d: u64) -> Result<(Tree, FamilySpec)> {
    let family = Family::ATree { d };
    validate(&family)?;
    let mut edges: Vec<(Vertex, Vertex)>;
    let mut n: usize;
    let mut ends: [Vertex; 2];
    if d.is_multiple_of(2) {
        edges = vec![(0, 1)];
        n = 2;
        ends = [0, 1];
    } else {
        edges = (1..=4).map(|l| (0, l)).collect();
        n = 5;
        ends = [1, 2];
    }
    let mut current = 2 + (d % 2);
    while current < d {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let leaves: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut new_ends = ends;
        for leaf in leaves {
            if let Some(side) = ends.iter().position(|&e| e == leaf) {
                new_ends[side] = n;
                for _ in 0..3 {
                    edges.push((leaf, n));
                    n += 1;
                }
            } else {
                edges.push((leaf, n));
                n += 1;
            }
        }
        ends = new_ends;
        current += 2;
    }
    Ok((Tree::new(n, &edges)?, spec_for(family)?))
}

pub fn gen_caterpillar(m: u64, d: u64) -> Result<(Tree, FamilySpec)> {
    let family = Family::Caterpillar { m, d };
    validate(&family)?;
    let (m, d) = (usize_of(m)?, usize_of(d)?);
    let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    let mut next = m;
    for spine in 1..m - 1 {
        for _ in 0..d - 2 {
            edges.push((spine, next));
            next += 1;
        }
    }
    Ok((Tree::new(next, &edges)?, spec_for(family)?))
}

/// Regenerates the instance described by `family`.
pub fn generate(family: &Family) -> Result<(Tree, FamilySpec)> {
    match *family {
        Family::Star { n } => gen_star(n),
        Family::Broom { n, d } => gen_broom(n, d),
        Family::BroomEven { k } => gen_broom_d(2 * k),
        Family::BroomOdd { k } => gen_broom_d(2 * k + 1),
        Family::ATree { d } => gen_a_tree(d),
        Family::Caterpillar { m, d } => gen_caterpillar(m, d),
    }
}

/// Branch ids at weight center `w`, by size descending then id.
fn branches_at(rv: &RootedView, w: Vertex) -> Vec<(usize, Vec<Vertex>)> {
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); rv.branch_count()];
    for v in 0..rv.order() {
        if let Some(b) = rv.branch(v) {
            members[b].push(v);
        }
    }
    let mut out: Vec<(usize, Vec<Vertex>)> = members
        .into_iter()
        .enumerate()
        .filter(|(b, _)| rv.side(rv.branch_root(*b)) == w)
        .collect();
    out.sort_by_key(|(b, m)| (std::cmp::Reverse(m.len()), *b));
    out
}

fn broom_ordering(tree: &Tree, d: usize) -> Vec<Vertex> {
    let n = tree.order();
    let mut leaves = d..n;
    let mut seq = vec![0];
    for p in 1..d {
        seq.push(p);
        seq.extend(leaves.next());
    }
    seq.extend(leaves);
    seq
}

fn a_even_ordering(rv: &RootedView) -> Vec<Vertex> {
    let (w, w2) = (rv.weight_centers()[0], rv.weight_centers()[1]);
    let flatten = |c: Vertex| -> Vec<Vertex> {
        branches_at(rv, c).into_iter().flat_map(|(_, m)| m).collect()
    };
    // odd positions from w′'s branches T1, T3, T5; even from w's T2, T4, T6
    let odd = flatten(w2);
    let even = flatten(w);
    let mut seq = vec![w];
    for (a, b) in odd.iter().zip(even.iter()) {
        seq.push(*a);
        seq.push(*b);
    }
    seq.push(w2);
    seq
}

fn a_odd_ordering(rv: &RootedView) -> Result<Vec<Vertex>> {
    let w = rv.weight_centers()[0];
    let branches = branches_at(rv, w);
    if branches.len() != 4 {
        return Err(Error::Internal(format!("A_(2k+1) has {} branches", branches.len())));
    }
    let t4_root = rv.branch_root(branches[3].0);
    let mut seq = vec![w];
    for (a, b) in branches[0].1.iter().zip(branches[1].1.iter()) {
        seq.push(*a);
        seq.push(*b);
    }
    let t3 = &branches[2].1;
    let t4: Vec<Vertex> = branches[3].1.iter().copied().filter(|&v| v != t4_root).collect();
    for (i, &a) in t3.iter().enumerate() {
        seq.push(a);
        if let Some(&b) = t4.get(i) {
            seq.push(b);
        }
    }
    seq.push(t4_root);
    Ok(seq)
}

/// The hand-built optimal ordering for each family,
/// certified before being returned.
///
/// Plain brooms get the broom interleave when it certifies and
/// [`Error::SearchFailed`] otherwise; for the named families a failed
/// certification is an [`Error::Internal`].
pub fn family_ordering(spec: &FamilySpec, rv: &RootedView) -> Result<Ordering> {
    let tree = rv.tree();
    if tree.order() as u64 != spec.expected_n {
        return Err(Error::BadParams(format!(
            "tree has {} vertices, {} expects {}",
            tree.order(),
            spec.family,
            spec.expected_n
        )));
    }
    if !is_applicable(tree) {
        return Err(Error::NotApplicable(format!("{} has no vertex of degree 3", spec.family)));
    }
    let seq = match spec.family {
        Family::Star { .. } => (0..tree.order()).collect(),
        Family::Broom { d, .. } => broom_ordering(tree, d as usize),
        Family::BroomEven { k } => broom_ordering(tree, 2 * k as usize),
        Family::BroomOdd { k } => broom_ordering(tree, 2 * k as usize + 1),
        Family::ATree { d } if d % 2 == 0 => a_even_ordering(rv),
        Family::ATree { .. } => a_odd_ordering(rv)?,
        Family::Caterpillar { .. } => search_ordering(rv)?.into_vec(),
    };
    let o = Ordering::new(seq)?;
    let cert = certify(rv, &o);
    if cert.is_certified() {
        Ok(o)
    } else if matches!(spec.family, Family::Broom { .. }) {
        Err(Error::SearchFailed(cert.reason.unwrap_or_default()))
    } else {
        Err(Error::Internal(format!(
            "ordering for {} failed certification: {}",
            spec.family,
            cert.reason.unwrap_or_default()
        )))
    }
}
