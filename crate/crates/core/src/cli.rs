//! The `hctree` command line.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 verification
//! failure, 3 size or budget limit, 4 no certificate found.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::bounds::{self, compare_bounds, is_applicable};
use crate::error::Error;
use crate::families::family_ordering;
use crate::io::{self, TreeFile};
use crate::ordering::{certify, coloring_from_ordering, search_ordering};
use crate::rooted::{analyze, RootedView};
use crate::solver::{exact_hc, verify_coloring, ExactConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_NO_CERTIFICATE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hctree", version, about = "Hamiltonian chromatic numbers of trees")]
struct Cli {
    /// Emit one JSON document instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family instance as a tree file with metadata comments.
    Gen {
        #[arg(long, value_parser = ["star", "broom", "a-tree", "caterpillar"])]
        family: String,
        /// Comma-separated key=value pairs, e.g. `d=4` or `n=10,d=4`.
        #[arg(long)]
        params: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural report: centers, levels and both lower bounds.
    Analyze { file: PathBuf },
    /// Build a certified optimal coloring and write it next to the input.
    Color {
        file: PathBuf,
        /// Coloring output path (default: FILE.coloring).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact hc by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the witness coloring here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring against the hamiltonian condition.
    Verify { tree: PathBuf, coloring: PathBuf },
    /// Weight-center bound versus graph-center bound.
    Compare {
        file: PathBuf,
        /// Evaluate even when the tree is a path or has fewer than 4 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Graphviz DOT text, with colors as labels when a coloring is given.
    Dot { file: PathBuf, coloring: Option<PathBuf> },
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_LIMIT,
            Error::SearchFailed(_) => EXIT_NO_CERTIFICATE,
            _ => EXIT_INPUT,
        };
        Failure { code, msg: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

fn load_tree(path: &Path) -> Result<TreeFile, Failure> {
    Ok(io::parse_tree(&read(path)?)?)
}

fn emit(out: &mut dyn Write, json: bool, doc: serde_json::Value, text: &[(&str, String)]) {
    if json {
        let _ = writeln!(out, "{doc}");
    } else {
        for (k, v) in text {
            let _ = writeln!(out, "{k}: {v}");
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Gen { family, params, output } => gen(&family, &params, output.as_deref(), json, out),
        Command::Analyze { file } => analyze_cmd(&file, json, out),
        Command::Color { file, output } => color(&file, output, json, out),
        Command::Exact { file, limit, budget, threads, output } => {
            exact(&file, ExactConfig { limit, budget, threads }, output.as_deref(), json, out)
        }
        Command::Verify { tree, coloring } => verify(&tree, &coloring, json, out),
        Command::Compare { file, force } => compare(&file, force, json, out),
        Command::Dot { file, coloring } => dot(&file, coloring.as_deref(), out),
    }
}

fn gen(family: &str, params: &str, output: Option<&Path>, json: bool, out: &mut dyn Write) -> CmdResult {
    let (tree, spec) = io::generate_from_params(family, params)?;
    let text = io::write_tree(&tree, Some(&spec));
    match output {
        Some(path) => {
            write_file(path, &text)?;
            emit(
                out,
                json,
                json!({ "spec": spec, "path": path.display().to_string() }),
                &[("instance", spec.family.to_string()), ("written", path.display().to_string())],
            );
        }
        None if json => emit(out, true, json!({ "spec": spec, "tree": text }), &[]),
        None => {
            let _ = write!(out, "{text}");
        }
    }
    Ok(EXIT_OK)
}

fn analyze_cmd(path: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(path)?;
    let rv = analyze(&file.tree);
    let tree = rv.tree();
    let n = tree.order();
    let applicable = is_applicable(tree);
    let lb_w = bounds::lower_bound_weight(&rv, true)?;
    let lb_c = bounds::lower_bound_center(tree, true)?;
    let epsilon = bounds::epsilon(tree);
    let upper = (n.saturating_sub(2) as u64).pow(2);

    let mut text = vec![
        ("n", n.to_string()),
        ("max_degree", tree.max_degree().to_string()),
        ("diameter", tree.diameter().to_string()),
        ("weight_centers", join(rv.weight_centers())),
        ("graph_centers", join(&tree.graph_centers())),
        ("zeta", rv.zeta().to_string()),
        ("epsilon", epsilon.to_string()),
        ("total_level_weight", rv.total_level().to_string()),
        ("total_level_center", bounds::center_total_level(tree).to_string()),
        ("lb_weight", lb_w.to_string()),
        ("lb_center", lb_c.to_string()),
        ("bounds_certifying", applicable.to_string()),
        ("db_half", bounds::is_db_half(&rv).to_string()),
        ("upper_bound", upper.to_string()),
    ];
    let mut doc = json!({
        "n": n,
        "max_degree": tree.max_degree(),
        "diameter": tree.diameter(),
        "weight_centers": rv.weight_centers(),
        "graph_centers": tree.graph_centers(),
        "zeta": rv.zeta(),
        "epsilon": epsilon,
        "total_level_weight": rv.total_level(),
        "total_level_center": bounds::center_total_level(tree),
        "lb_weight": lb_w,
        "lb_center": lb_c,
        "bounds_certifying": applicable,
        "db_half": bounds::is_db_half(&rv),
        "upper_bound": upper,
    });
    if let Some(spec) = io::family_of(&file) {
        let spec = spec?;
        let consistent = spec.expected_n == n as u64
            && spec.expected_total_level.is_none_or(|t| t == rv.total_level())
            && spec.expected_hc.is_none_or(|h| h == lb_w);
        text.push(("instance", spec.family.to_string()));
        text.push(("expected_n", spec.expected_n.to_string()));
        if let Some(tl) = spec.expected_total_level {
            text.push(("expected_total_level", tl.to_string()));
        }
        if let Some(hc) = spec.expected_hc {
            text.push(("expected_hc", hc.to_string()));
        }
        text.push(("metadata_consistent", consistent.to_string()));
        doc["spec"] = json!(spec);
        doc["metadata_consistent"] = json!(consistent);
    }
    emit(out, json, doc, &text);
    Ok(EXIT_OK)
}

fn color(path: &Path, output: Option<PathBuf>, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(path)?;
    let rv = analyze(&file.tree);
    if !is_applicable(rv.tree()) {
        return Err(Failure {
            code: EXIT_NO_CERTIFICATE,
            msg: "no certificate: the tree needs n >= 4 and a vertex of degree 3".into(),
        });
    }
    let ordering = match io::family_of(&file) {
        Some(spec) => family_ordering(&spec?, &rv)?,
        None => search_ordering(&rv)?,
    };
    let coloring = coloring_from_ordering(&rv, &ordering)?;
    let cert = certify(&rv, &ordering);
    if !cert.is_certified() {
        return Err(Failure {
            code: EXIT_NO_CERTIFICATE,
            msg: format!("ordering not certified: {}", cert.reason.unwrap_or_default()),
        });
    }
    let target = output.unwrap_or_else(|| {
        let mut p = path.as_os_str().to_owned();
        p.push(".coloring");
        PathBuf::from(p)
    });
    write_file(&target, &io::write_coloring(&coloring))?;
    emit(
        out,
        json,
        json!({
            "ordering": ordering,
            "colors": coloring.colors(),
            "span": coloring.span(),
            "certificate": cert.kind,
            "lb_weight": cert.claimed_span,
            "coloring_file": target.display().to_string(),
        }),
        &[
            ("ordering", ordering.to_string()),
            ("colors", join(coloring.colors())),
            ("span", coloring.span().to_string()),
            ("certificate", cert.kind.to_string()),
            ("coloring_file", target.display().to_string()),
        ],
    );
    Ok(EXIT_OK)
}

fn exact(path: &Path, cfg: ExactConfig, output: Option<&Path>, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(path)?;
    let rv = analyze(&file.tree);
    let r = exact_hc(&rv, &cfg)?;
    if let Some(p) = output {
        write_file(p, &io::write_coloring(&r.witness))?;
    }
    let status = if r.limit_hit { "budget-capped" } else { "exact" };
    let mut text = vec![
        ("hc", r.hc.to_string()),
        ("status", status.to_string()),
        ("explored", r.explored.to_string()),
        ("ordering", r.ordering.to_string()),
    ];
    if output.is_none() {
        text.push(("witness", join(r.witness.colors())));
    }
    emit(out, json, json!({ "result": r, "status": status }), &text);
    Ok(if r.limit_hit { EXIT_LIMIT } else { EXIT_OK })
}

fn verify(tree: &Path, coloring: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(tree)?;
    let rv: RootedView = analyze(&file.tree);
    let c = io::parse_coloring(&read(coloring)?, rv.order())?;
    let violations = verify_coloring(&rv, &c)?;
    if json {
        let _ = writeln!(
            out,
            "{}",
            json!({ "valid": violations.is_empty(), "span": c.span(), "violations": violations })
        );
    } else if violations.is_empty() {
        let _ = writeln!(out, "valid: true\nspan: {}", c.span());
    } else {
        let _ = writeln!(out, "valid: false");
        for v in &violations {
            let _ = writeln!(
                out,
                "violation: {} {} required {} actual {}",
                v.u, v.v, v.required, v.actual
            );
        }
    }
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_INVALID })
}

fn compare(path: &Path, force: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(path)?;
    let rv = analyze(&file.tree);
    let r = compare_bounds(&rv, force)?;
    emit(
        out,
        json,
        json!(r),
        &[
            ("n", r.n.to_string()),
            ("lb_weight", r.lb_weight.to_string()),
            ("lb_center", r.lb_center.to_string()),
            ("difference", r.difference.to_string()),
            ("zeta", r.zeta.to_string()),
            ("epsilon", r.epsilon.to_string()),
            ("total_level_weight", r.total_level.to_string()),
            ("total_level_center", r.center_total_level.to_string()),
            ("db_half", r.db_half.to_string()),
            ("applicable", r.applicable.to_string()),
        ],
    );
    Ok(EXIT_OK)
}

fn dot(path: &Path, coloring: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let file = load_tree(path)?;
    let c = match coloring {
        Some(p) => Some(io::parse_coloring(&read(p)?, file.tree.order())?),
        None => None,
    };
    let _ = write!(out, "{}", io::to_dot(&file.tree, c.as_ref()));
    Ok(EXIT_OK)
}
