//! Plain-text tree, ordering and coloring files, and DOT export.
//!
//! Tree file: `#` lines are comments, the first other line is `n`, followed
//! by exactly `n − 1` lines `u v` (0-based). Generated files carry
//! `# key: value` metadata comments (family, params, expected values).
//! Ordering file: one line of `n` space-separated ids.
//! Coloring file: `n` lines `v c`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::ordering::{Coloring, Ordering};
use crate::tree::Tree;

#[derive(Debug, Clone)]
pub struct TreeFile {
    pub tree: Tree,
    pub meta: BTreeMap<String, String>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("expected an integer, got {tok:?}") })
}

pub fn parse_tree(text: &str) -> Result<TreeFile> {
    let mut meta = BTreeMap::new();
    for l in text.lines().map(str::trim) {
        if let Some((k, v)) = l.strip_prefix('#').and_then(|c| c.split_once(':')) {
            meta.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty tree file".into() })?;
    let n: usize = parse_num(line, first)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected \"u v\", got {l:?}") });
        }
        edges.push((parse_num(line, toks[0])?, parse_num(line, toks[1])?));
    }
    if edges.len() + 1 != n {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header says {n} vertices, so {} edges are required; found {}", n.saturating_sub(1), edges.len()),
        });
    }
    Ok(TreeFile { tree: Tree::new(n, &edges)?, meta })
}

pub fn write_tree(tree: &Tree, spec: Option<&FamilySpec>) -> String {
    let mut s = String::new();
    if let Some(spec) = spec {
        let _ = writeln!(s, "# family: {}", spec.family.name());
        let _ = writeln!(s, "# params: {}", spec.family.params());
        let _ = writeln!(s, "# instance: {}", spec.family);
        let _ = writeln!(s, "# expected_n: {}", spec.expected_n);
        if let Some(hc) = spec.expected_hc {
            let _ = writeln!(s, "# expected_hc: {hc}");
        }
        if let Some(tl) = spec.expected_total_level {
            let _ = writeln!(s, "# expected_total_level: {tl}");
        }
    }
    let _ = writeln!(s, "{}", tree.order());
    for &(u, v) in tree.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses `k=v` pairs separated by commas.
fn parse_params(params: &str) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::BadParams(format!("expected key=value, got {part:?}")))?;
        let v = v
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("{k} must be a non-negative integer")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

/// Builds a family instance from a CLI family name and parameter string:
/// `star n=..`, `broom n=..,d=..` / `broom d=..` (B_d) / `broom k=..` (B_2k),
/// `a-tree d=..` / `a-tree k=..` (A_2k), `caterpillar m=..,d=..`.
pub fn generate_from_params(family: &str, params: &str) -> Result<(Tree, FamilySpec)> {
    let p = parse_params(params)?;
    let get = |k: &str| p.get(k).copied();
    let need = |k: &str| get(k).ok_or_else(|| Error::BadParams(format!("{family} needs {k}=..")));
    let allow = |keys: &[&str]| -> Result<()> {
        match p.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::BadParams(format!("unknown parameter {k} for {family}"))),
            None => Ok(()),
        }
    };
    match family {
        "star" => {
            allow(&["n"])?;
            families::gen_star(need("n")?)
        }
        "broom" => {
            allow(&["n", "d", "k"])?;
            match (get("n"), get("d"), get("k")) {
                (Some(n), Some(d), None) => families::gen_broom(n, d),
                (None, Some(d), None) => families::gen_broom_d(d),
                (None, None, Some(k)) => families::gen_broom_d(2 * k),
                _ => Err(Error::BadParams("broom takes n=..,d=.. or d=.. or k=..".into())),
            }
        }
        "a-tree" => {
            allow(&["d", "k"])?;
            match (get("d"), get("k")) {
                (Some(d), None) => families::gen_a_tree(d),
                (None, Some(k)) => families::gen_a_tree(2 * k),
                _ => Err(Error::BadParams("a-tree takes d=.. or k=..".into())),
            }
        }
        "caterpillar" => {
            allow(&["m", "d"])?;
            families::gen_caterpillar(need("m")?, need("d")?)
        }
        other => Err(Error::BadParams(format!("unknown family {other:?}"))),
    }
}

/// The family instance recorded in a generated file's metadata, if any and
/// if the file's tree is exactly that instance.
pub fn family_of(file: &TreeFile) -> Option<Result<FamilySpec>> {
    let family = file.meta.get("family")?;
    let params = file.meta.get("params")?;
    Some(generate_from_params(family, params).and_then(|(t, spec)| {
        if t == file.tree {
            Ok(spec)
        } else {
            Err(Error::BadParams(format!(
                "tree does not match the {} instance named in its metadata",
                spec.family
            )))
        }
    }))
}

pub fn parse_ordering(text: &str) -> Result<Ordering> {
    let mut seq = Vec::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            seq.push(parse_num(line, tok)?);
        }
    }
    Ordering::new(seq)
}

pub fn write_ordering(o: &Ordering) -> String {
    format!("{o}\n")
}

/// Parses a coloring for a tree of order `n`; every vertex must appear once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<u64>> = vec![None; n];
    let mut count = 0;
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected \"v c\", got {l:?}") });
        }
        let v: usize = parse_num(line, toks[0])?;
        let c: i64 = parse_num(line, toks[1])?;
        if v >= n {
            return Err(Error::BadVertexId { vertex: v, n });
        }
        if c < 0 {
            return Err(Error::NegativeColor { vertex: v, color: c });
        }
        if colors[v].replace(c as u64).is_some() {
            return Err(Error::Parse { line, msg: format!("vertex {v} colored twice") });
        }
        count += 1;
    }
    if count != n {
        return Err(Error::IncompleteColoring { n, got: count });
    }
    Ok(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, col) in c.colors().iter().enumerate() {
        let _ = writeln!(s, "{v} {col}");
    }
    s
}

/// Graphviz `graph` text; colors, when given, become node labels.
pub fn to_dot(tree: &Tree, coloring: Option<&Coloring>) -> String {
    let mut s = String::from("graph T {\n");
    for v in 0..tree.order() {
        match coloring {
            Some(c) => {
                let _ = writeln!(s, "  {v} [label=\"{v}: {}\"];", c.color(v));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for &(u, v) in tree.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
