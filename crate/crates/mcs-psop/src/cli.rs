//! File formats, DOT export and the command-line front end.
//!
//! Graphs: one edge per line as `u v`, isolated vertices as `vertex w`,
//! `#` comments; or JSON `{"vertices": [...], "edges": [["u","v"], ...]}`.
//! Orders: one constraint per line as `x < y`, same comment rule; or JSON
//! `{"pairs": [["x","y"], ...]}`. JSON input is detected by a leading `{`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::clique_graph::{build_clique_graph, CliqueGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layers::{build_layer_structure, LayerStructure};
use crate::order::{order_from_pairs, LinearOrder, StrictPartialOrder};
use crate::search::chordality_peo;
use crate::solver::{end_vertex, solve, verify_solution};

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct OrderFile {
    pairs: Vec<[String; 2]>,
}

fn looks_like_json(src: &str) -> bool {
    src.trim_start().starts_with('{')
}

fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

#[derive(Default)]
struct GraphAccumulator {
    vertices: BTreeSet<String>,
    edges: Vec<(String, String)>,
    seen: BTreeSet<(String, String)>,
}

impl GraphAccumulator {
    fn add_edge(&mut self, line: usize, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at '{u}'"),
            });
        }
        let key = (u.min(v).to_string(), u.max(v).to_string());
        if !self.seen.insert(key) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge '{u} {v}'"),
            });
        }
        self.vertices.insert(u.to_string());
        self.vertices.insert(v.to_string());
        self.edges.push((u.to_string(), v.to_string()));
        Ok(())
    }
}

/// Parses either graph format.
pub fn parse_graph(src: &str) -> Result<Graph> {
    let mut acc = GraphAccumulator::default();
    if looks_like_json(src) {
        let file: GraphFile = serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        acc.vertices.extend(file.vertices.iter().cloned());
        for (i, [u, v]) in file.edges.iter().enumerate() {
            acc.add_edge(i + 1, u, v)?;
        }
    } else {
        for (line, text) in content_lines(src) {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            match tokens.as_slice() {
                ["vertex", name] => {
                    acc.vertices.insert(name.to_string());
                }
                [u, v] => acc.add_edge(line, u, v)?,
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected 'u v' or 'vertex w', got '{text}'"),
                    })
                }
            }
        }
    }
    Graph::from_named(acc.vertices.into_iter().collect(), acc.edges)
}

/// Text form: isolated vertices first, then edges, all sorted.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.degree(g.index_of(v).unwrap()) == 0 {
            writeln!(out, "vertex {v}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile {
        vertices: g.vertices().to_vec(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

/// Parses either order format; every mentioned vertex must exist in `g`.
pub fn parse_order(src: &str, g: &Graph) -> Result<StrictPartialOrder<String>> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    let check = |line: usize, name: &str| -> Result<()> {
        if g.index_of(name).is_none() {
            return Err(Error::Parse {
                line,
                msg: format!("unknown vertex '{name}'"),
            });
        }
        Ok(())
    };
    if looks_like_json(src) {
        let file: OrderFile = serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        for (i, [x, y]) in file.pairs.iter().enumerate() {
            check(i + 1, x)?;
            check(i + 1, y)?;
            pairs.push((x.clone(), y.clone()));
        }
    } else {
        for (line, text) in content_lines(src) {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            match tokens.as_slice() {
                [x, "<", y] => {
                    check(line, x)?;
                    check(line, y)?;
                    pairs.push((x.to_string(), y.to_string()));
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected 'x < y', got '{text}'"),
                    })
                }
            }
        }
    }
    order_from_pairs(pairs)
}

pub fn order_to_text(r: &StrictPartialOrder<String>) -> String {
    let mut out = String::new();
    for (x, y) in r.pairs() {
        writeln!(out, "{x} < {y}").unwrap();
    }
    out
}

pub fn order_to_json(r: &StrictPartialOrder<String>) -> String {
    let file = OrderFile {
        pairs: r.pairs().map(|(x, y)| [x.clone(), y.clone()]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

/// Parses a witness ordering: whitespace-separated vertex names, with
/// comments allowed and a leading `YES` line (as printed by `solve`)
/// ignored. A leading `NO` means there is nothing to verify.
pub fn parse_ordering(src: &str) -> Result<Option<LinearOrder<String>>> {
    let mut tokens: Vec<String> = content_lines(src)
        .flat_map(|(_, line)| line.split_whitespace().map(String::from).collect::<Vec<_>>())
        .collect();
    match tokens.first().map(String::as_str) {
        Some("YES") => {
            tokens.remove(0);
        }
        Some("NO") => return Ok(None),
        _ => {}
    }
    LinearOrder::new(tokens).map(Some)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn brace_set(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

/// DOT rendering of a clique graph with labeled, weighted edges.
pub fn dot_clique_graph(cg: &CliqueGraph) -> String {
    let mut out = String::from("graph clique_graph {\n  node [shape=box];\n");
    for n in 0..cg.node_count() {
        writeln!(
            out,
            "  k{n} [label=\"{}\"];",
            dot_escape(&brace_set(&cg.clique_names(n)))
        )
        .unwrap();
    }
    for e in cg.edges() {
        writeln!(
            out,
            "  k{} -- k{} [label=\"{} w={}\"];",
            e.a,
            e.b,
            dot_escape(&brace_set(&cg.label_names(e))),
            e.weight
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a layer structure: units boxed as clusters, unit edges
/// drawn between representative cliques with the shared label.
pub fn dot_layers(ls: &LayerStructure) -> String {
    let mut out = String::from("graph layer_structure {\n  compound=true;\n  node [shape=box];\n");
    for (u, unit) in ls.units().iter().enumerate() {
        let role = if u == ls.root() { " (root)" } else { "" };
        writeln!(
            out,
            "  subgraph cluster_unit{u} {{\n    label=\"U{u} layer {}{}\";",
            ls.layer_of(u),
            role
        )
        .unwrap();
        for &n in unit.cliques() {
            writeln!(
                out,
                "    k{n} [label=\"{}\"];",
                dot_escape(&brace_set(&ls.clique_vertex_names(n)))
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    for e in ls.unit_edges() {
        let label: Vec<String> = e
            .label
            .iter()
            .map(|&v| ls.vertex_names()[v].clone())
            .collect();
        writeln!(
            out,
            "  k{} -- k{} [ltail=cluster_unit{}, lhead=cluster_unit{}, label=\"{} w={}\"];",
            ls.unit(e.a).cliques()[0],
            ls.unit(e.b).cliques()[0],
            e.a,
            e.b,
            dot_escape(&brace_set(&label)),
            e.weight
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Plain-text rendering of a layer structure: units per layer with parents
/// and labels, then bags.
pub fn layers_to_text(ls: &LayerStructure) -> String {
    let mut out = String::new();
    let edge_label = |u: usize| -> Option<String> {
        let p = ls.parent_of(u)?;
        ls.unit_edges()
            .iter()
            .find(|e| (e.a, e.b) == (u.min(p), u.max(p)))
            .map(|e| {
                let names: Vec<String> = e
                    .label
                    .iter()
                    .map(|&v| ls.vertex_names()[v].clone())
                    .collect();
                brace_set(&names)
            })
    };
    for (u, unit) in ls.units().iter().enumerate() {
        let cliques: Vec<String> = unit
            .cliques()
            .iter()
            .map(|&n| brace_set(&ls.clique_vertex_names(n)))
            .collect();
        match ls.parent_of(u) {
            None => writeln!(out, "unit U{u} layer={} root cliques: {}", ls.layer_of(u), cliques.join(" "))
                .unwrap(),
            Some(p) => writeln!(
                out,
                "unit U{u} layer={} parent=U{p} label={} cliques: {}",
                ls.layer_of(u),
                edge_label(u).unwrap_or_default(),
                cliques.join(" ")
            )
            .unwrap(),
        }
    }
    for bag in ls.bags() {
        let members: Vec<String> = bag.iter().map(|u| format!("U{u}")).collect();
        writeln!(out, "bag layer={}: {}", ls.layer_of(bag[0]), members.join(" ")).unwrap();
    }
    out
}

#[derive(Parser)]
#[command(
    name = "mcs-psop",
    about = "Maximum cardinality search orderings of chordal graphs under partial-order constraints",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check chordality; print a perfect elimination ordering when chordal.
    Recognize { graph: PathBuf },
    /// List the maximal cliques, one per line.
    Cliques { graph: PathBuf },
    /// Print the clique graph edges with labels and weights.
    CliqueGraph {
        graph: PathBuf,
        /// Emit DOT instead of plain text.
        #[arg(long)]
        dot: bool,
    },
    /// Print the layer structure rooted at a clique.
    Layers {
        graph: PathBuf,
        /// Comma-separated vertices naming the root clique (must match
        /// exactly one maximal clique).
        #[arg(long, value_delimiter = ',', required = true)]
        root: Vec<String>,
        /// Emit DOT instead of plain text.
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether an MCS ordering extends the order; print a witness.
    Solve { graph: PathBuf, order: PathBuf },
    /// Decide whether the vertex can be visited last by MCS.
    EndVertex { graph: PathBuf, vertex: String },
    /// Check a witness ordering against the graph and order.
    Verify {
        graph: PathBuf,
        order: PathBuf,
        ordering: PathBuf,
    },
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

const EXIT_OK: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_ERROR: i32 = 2;

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_ERROR
            } else {
                // --help / --version
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Recognize { graph } => {
            let g = load_graph(&graph)?;
            match chordality_peo(&g) {
                Some(peo) => {
                    let names: Vec<&str> = peo.iter().map(String::as_str).collect();
                    writeln!(out, "chordal")?;
                    writeln!(out, "{}", names.join(" "))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not chordal")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Cliques { graph } => {
            let g = load_graph(&graph)?;
            for clique in crate::search::maximal_cliques(&g)? {
                writeln!(out, "{}", clique.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::CliqueGraph { graph, dot } => {
            let g = load_graph(&graph)?;
            let cg = build_clique_graph(&g)?;
            if dot {
                write!(out, "{}", dot_clique_graph(&cg))?;
            } else {
                for e in cg.edges() {
                    writeln!(
                        out,
                        "{} -- {} label={} weight={}",
                        brace_set(&cg.clique_names(e.a)),
                        brace_set(&cg.clique_names(e.b)),
                        brace_set(&cg.label_names(e)),
                        e.weight
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Layers { graph, root, dot } => {
            let g = load_graph(&graph)?;
            let cg = build_clique_graph(&g)?;
            let k = resolve_root_clique(&cg, &root)?;
            let ls = build_layer_structure(&cg, k)?;
            if dot {
                write!(out, "{}", dot_layers(&ls))?;
            } else {
                write!(out, "{}", layers_to_text(&ls))?;
            }
            Ok(EXIT_OK)
        }
        Command::Solve { graph, order } => {
            let g = load_graph(&graph)?;
            let r = parse_order(&std::fs::read_to_string(&order)?, &g)?;
            let answer = solve(&g, &r)?;
            report_answer(out, &answer)
        }
        Command::EndVertex { graph, vertex } => {
            let g = load_graph(&graph)?;
            let answer = end_vertex(&g, &vertex)?;
            report_answer(out, &answer)
        }
        Command::Verify {
            graph,
            order,
            ordering,
        } => {
            let g = load_graph(&graph)?;
            let r = parse_order(&std::fs::read_to_string(&order)?, &g)?;
            let sigma = match parse_ordering(&std::fs::read_to_string(&ordering)?)? {
                Some(sigma) => sigma,
                None => {
                    writeln!(out, "invalid")?;
                    return Ok(EXIT_NO);
                }
            };
            if verify_solution(&g, &r, &sigma)? {
                writeln!(out, "valid")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "invalid")?;
                Ok(EXIT_NO)
            }
        }
    }
}

fn report_answer(out: &mut dyn Write, answer: &crate::solver::PsopAnswer) -> Result<i32> {
    if answer.decision {
        let witness = answer.witness.as_ref().expect("yes answers carry a witness");
        let names: Vec<&str> = witness.iter().map(String::as_str).collect();
        writeln!(out, "YES")?;
        writeln!(out, "{}", names.join(" "))?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "NO")?;
        Ok(EXIT_NO)
    }
}

fn resolve_root_clique(cg: &CliqueGraph, root: &[String]) -> Result<usize> {
    let want: BTreeSet<&str> = root.iter().map(String::as_str).collect();
    let candidates: Vec<usize> = (0..cg.node_count())
        .filter(|&n| {
            let names: BTreeSet<String> = cg.clique_names(n).into_iter().collect();
            want.iter().all(|v| names.contains(*v))
        })
        .collect();
    match candidates.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::invalid(format!(
            "no maximal clique contains {{{}}}",
            root.join(",")
        ))),
        several => {
            let listed: Vec<String> = several
                .iter()
                .map(|&n| brace_set(&cg.clique_names(n)))
                .collect();
            Err(Error::invalid(format!(
                "ambiguous root {{{}}}: contained in {}",
                root.join(","),
                listed.join(", ")
            )))
        }
    }
}
