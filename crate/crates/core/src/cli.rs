//! The `incrtree` command-line tool.
//!
//! Exit codes: 0 success, 1 self-check failure, 2 usage or parse error,
//! 3 connectivity precondition, 4 size bound.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::broken_circuits::{breaks_direct, enumerate_bcf_subforests, forest_preimage};
use crate::error::Error;
use crate::graph::Graph;
use crate::invariants::{
    chromatic_by_deletion_contraction, chromatic_by_subgraph_expansion,
    chromatic_coeffs_via_forests, csf_x_oracle, csf_x_via_forests, csf_y_oracle, csf_y_via_forests,
    eta_bruteforce, eta_via_trees,
};
use crate::json;
use crate::limits::Limits;
use crate::selfcheck::{
    run_selfcheck, SelfcheckOptions, DEFAULT_SAMPLES, DEFAULT_SEED, EXHAUSTIVE_N,
};
use crate::subgraphs::connected_spanning_subgraphs;
use crate::tree::increasing_g_connected_trees;
use crate::tree_map::{
    enumerate_fiber, fiber_edge_sets, fiber_size, fiber_tree_count, increasing_tree_of,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONNECTIVITY: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "incrtree",
    version,
    about = "Increasing trees, fibers, and chromatic invariants of small graphs"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,

    /// Emit a plain-text table instead of JSON.
    #[arg(long, global = true)]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the increasing tree assigned to a connected graph.
    K { graph: PathBuf },

    /// Compute an invariant by the tree route, the subgraph oracle, or both.
    Invariants {
        #[arg(value_enum)]
        which: Invariant,
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },

    /// One record per increasing G-connected tree with the size of its fiber.
    Fibers {
        graph: PathBuf,
        /// Also list every fiber member.
        #[arg(long)]
        list: bool,
        /// Count and list only the spanning trees in each fiber.
        #[arg(long)]
        trees_only: bool,
    },

    /// Broken-circuit-free subtrees paired with their increasing trees.
    Bcf {
        graph: PathBuf,
        /// Also list the breaks of every spanning subtree.
        #[arg(long)]
        breaks_all: bool,
        /// List BCF subforests with this many components instead of subtrees.
        #[arg(long)]
        q: Option<usize>,
    },

    /// Check every identity on all graphs up to `--max-n` vertices.
    Selfcheck {
        #[arg(long, default_value_t = EXHAUSTIVE_N)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random connected graphs per vertex count above the exhaustive range.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Eta,
    Chromatic,
    CsfX,
    CsfY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Trees,
    Oracle,
    Both,
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        Outcome {
            code: exit_code(err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Disconnected { .. } | Error::EmptyGraph => EXIT_CONNECTIVITY,
        Error::TooLarge { .. } => EXIT_BOUND,
        _ => EXIT_PARSE,
    }
}

/// Runs the tool on `args` (including the program name) without touching the
/// process's stdout or exit status.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let table = cli.table;
    let result = match cli.command {
        Command::K { graph } => read_graph(&graph).and_then(|g| cmd_k(&g, table)),
        Command::Invariants {
            which,
            graph,
            method,
        } => read_graph(&graph).and_then(|g| cmd_invariants(&g, which, method, table)),
        Command::Fibers {
            graph,
            list,
            trees_only,
        } => read_graph(&graph).and_then(|g| cmd_fibers(&g, list, trees_only, table)),
        Command::Bcf {
            graph,
            breaks_all,
            q,
        } => read_graph(&graph).and_then(|g| cmd_bcf(&g, breaks_all, q, table)),
        Command::Selfcheck {
            max_n,
            seed,
            samples,
        } => {
            return cmd_selfcheck(
                &SelfcheckOptions {
                    max_n,
                    seed,
                    samples,
                },
                table,
            );
        }
    };
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(err) => Outcome::error(&err),
    }
}

fn read_graph(path: &Path) -> crate::Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    text.parse()
}

fn render(value: Value) -> String {
    let mut s = serde_json::to_string(&value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_k(g: &Graph, table: bool) -> crate::Result<String> {
    let tree = increasing_tree_of(g)?;
    Ok(if table {
        format!("{tree}\n")
    } else {
        render(json::tree(&tree))
    })
}

/// A computed invariant, rendered either way.
struct Rendered {
    json: Value,
    text: String,
}

fn cmd_invariants(
    g: &Graph,
    which: Invariant,
    method: Method,
    table: bool,
) -> crate::Result<String> {
    let want_trees = method != Method::Oracle;
    let want_oracle = method != Method::Trees;
    let name = match which {
        Invariant::Eta => "eta",
        Invariant::Chromatic => "chromatic",
        Invariant::CsfX => "csf-x",
        Invariant::CsfY => "csf-y",
    };

    let poly = |p: crate::IntPolynomial| Rendered {
        text: p.to_string(),
        json: json::polynomial(&p),
    };
    let mut fields: Vec<(&str, Rendered)> = Vec::new();
    match which {
        Invariant::Eta => {
            if want_trees {
                fields.push(("trees", poly(eta_via_trees(g)?)));
            }
            if want_oracle {
                fields.push(("oracle", poly(eta_bruteforce(g)?)));
            }
        }
        Invariant::Chromatic => {
            if want_trees {
                fields.push(("trees", poly(chromatic_coeffs_via_forests(g)?)));
            }
            if want_oracle {
                fields.push(("oracle", poly(chromatic_by_subgraph_expansion(g)?)));
                fields.push((
                    "deletion_contraction",
                    poly(chromatic_by_deletion_contraction(g)),
                ));
            }
        }
        Invariant::CsfX => {
            let x = |e: crate::PExpansionX| Rendered {
                text: e.to_string(),
                json: json::pexpansion_x(&e),
            };
            if want_trees {
                fields.push(("trees", x(csf_x_via_forests(g)?)));
            }
            if want_oracle {
                fields.push(("oracle", x(csf_x_oracle(g)?)));
            }
        }
        Invariant::CsfY => {
            let y = |e: crate::PExpansionY| Rendered {
                text: e.to_string(),
                json: json::pexpansion_y(&e),
            };
            if want_trees {
                fields.push(("trees", y(csf_y_via_forests(g)?)));
            }
            if want_oracle {
                fields.push(("oracle", y(csf_y_oracle(g)?)));
            }
        }
    }
    let agree =
        (method == Method::Both).then(|| fields.windows(2).all(|w| w[0].1.json == w[1].1.json));

    if table {
        let mut out = format!("invariant: {name}\n");
        for (key, r) in &fields {
            writeln!(out, "{key}: {}", r.text).expect("writing to a String");
        }
        if let Some(a) = agree {
            writeln!(out, "agree: {a}").expect("writing to a String");
        }
        return Ok(out);
    }
    let mut obj = Map::new();
    obj.insert("invariant".into(), json!(name));
    for (key, r) in fields {
        obj.insert(key.into(), r.json);
    }
    if let Some(a) = agree {
        obj.insert("agree".into(), json!(a));
    }
    Ok(render(Value::Object(obj)))
}

fn cmd_fibers(g: &Graph, list: bool, trees_only: bool, table: bool) -> crate::Result<String> {
    g.require_connected()?;
    let mut records = Vec::new();
    let mut text = String::new();
    let mut total = BigUint::default();
    for tree in increasing_g_connected_trees(g)? {
        let sets = fiber_edge_sets(g, &tree)?;
        let size = if trees_only {
            fiber_tree_count(g, &tree)?
        } else {
            fiber_size(g, &tree)?
        };
        total += &size;
        let mut j_sizes = Map::new();
        for (v, e) in &sets {
            j_sizes.insert(v.to_string(), json!(e.len()));
        }
        let mut record = Map::new();
        record.insert("tree".into(), json::tree(&tree));
        record.insert("j_sizes".into(), Value::Object(j_sizes));
        record.insert("fiber_size".into(), json!(size.to_string()));
        let j_text: Vec<String> = sets
            .iter()
            .map(|(v, e)| format!("{v}:{}", e.len()))
            .collect();
        writeln!(text, "{tree} | |J∩G| {} | fiber {size}", j_text.join(" "))
            .expect("writing to a String");
        if list {
            let members: Vec<Graph> = enumerate_fiber(g, &tree)?
                .filter(|q| !trees_only || q.is_tree())
                .collect();
            for q in &members {
                writeln!(text, "    {}", q.edges()).expect("writing to a String");
            }
            record.insert(
                "fiber".into(),
                Value::Array(members.iter().map(|q| json::edges(q.edges())).collect()),
            );
        }
        records.push(Value::Object(record));
    }
    if table {
        writeln!(text, "total {total}").expect("writing to a String");
        return Ok(text);
    }
    Ok(render(json!({
        "trees_only": trees_only,
        "records": records,
        "total": total.to_string(),
    })))
}

fn cmd_bcf(g: &Graph, breaks_all: bool, q: Option<usize>, table: bool) -> crate::Result<String> {
    g.require_connected()?;
    let mut text = String::new();
    let mut pairs = Vec::new();
    for sub in enumerate_bcf_subforests(g, Some(q.unwrap_or(1)))? {
        let forest = forest_preimage(&sub)?;
        let image = if q.is_none() {
            json::tree(&forest.components()[0])
        } else {
            json::forest(&forest)
        };
        let key = if q.is_none() { "tree" } else { "forest" };
        let trees: Vec<String> = forest.components().iter().map(|t| t.to_string()).collect();
        writeln!(text, "{} <-> {}", sub.edges(), trees.join("; ")).expect("writing to a String");
        pairs.push(json!({ "subgraph": json::edges(sub.edges()), key: image }));
    }
    let mut obj = Map::new();
    obj.insert("pairs".into(), Value::Array(pairs));
    if breaks_all {
        let mut trees: Vec<Graph> = connected_spanning_subgraphs(g, &Limits::default())?
            .filter(|t| t.edge_count() + 1 == g.vertex_count())
            .collect();
        trees.sort_by_key(|t| t.edges());
        let mut records = Vec::new();
        text.push_str("breaks:\n");
        for t in trees {
            let breaks = breaks_direct(&t, g)?;
            writeln!(text, "    {} breaks {}", t.edges(), breaks).expect("writing to a String");
            records
                .push(json!({ "subtree": json::edges(t.edges()), "breaks": json::edges(breaks) }));
        }
        obj.insert("breaks_all".into(), Value::Array(records));
    }
    Ok(if table {
        text
    } else {
        render(Value::Object(obj))
    })
}

fn cmd_selfcheck(opts: &SelfcheckOptions, table: bool) -> Outcome {
    let outcomes = match run_selfcheck(opts) {
        Ok(o) => o,
        Err(err) => return Outcome::error(&err),
    };
    let all_pass = outcomes.iter().all(|o| o.failed == 0);
    let code = if all_pass {
        EXIT_OK
    } else {
        EXIT_SELFCHECK_FAILED
    };
    let stdout = if table {
        let mut out = String::new();
        for o in &outcomes {
            let status = if o.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {} ({} passed, {} failed)",
                o.name, o.passed, o.failed
            )
            .expect("writing to a String");
            if let Some((g, why)) = &o.counterexample {
                writeln!(out, "  counterexample ({why}):").expect("writing to a String");
                for line in g.to_text().lines() {
                    writeln!(out, "  {line}").expect("writing to a String");
                }
            }
        }
        out
    } else {
        let checks: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.name,
                    "passed": o.passed,
                    "failed": o.failed,
                    "counterexample": o.counterexample.as_ref().map(|(g, why)| json!({
                        "graph": g.to_text(),
                        "reason": why,
                    })),
                })
            })
            .collect();
        render(json!({ "max_n": opts.max_n, "seed": opts.seed, "checks": checks, "ok": all_pass }))
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
