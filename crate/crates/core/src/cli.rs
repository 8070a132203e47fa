//! Command-line front end. `run` returns the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::{BoundaryKind, Complex, Pair, VertexId};
use crate::decision::{self, Applicability, Decomposition, Execution, Verdict};
use crate::gallery;
use crate::io::{self, Labels, PairDocument, Report, EXIT_INAPPLICABLE, EXIT_INPUT_ERROR};
use crate::link::{self, LinkError, MarkedLink};
use crate::subdivide::barycentric_subdivision;

#[derive(Parser, Debug)]
#[command(name = "conetype", version, about = "Decide computable type of finite simplicial pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a pair document (`-` for stdin, `gallery:NAME[:PARAM]` for built-ins).
    Check {
        input: String,
        #[arg(long)]
        json: bool,
        /// Decide vertices concurrently; output is identical.
        #[arg(long)]
        parallel: bool,
        /// Also print passing vertices with their covers.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Decide a cone pair given as a graph `L` with terminals `N`.
    CheckCone {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the marked link of one vertex.
    Link {
        input: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a boundary of `X` as a pair document with empty `A`.
    Boundary {
        input: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Print the iterated barycentric subdivision as a pair document.
    Subdivide {
        input: String,
        #[arg(long, default_value_t = 1)]
        iterations: u32,
    },
    /// Sufficient test: every piece has computable type, so the ambient pair does.
    UnionCheck {
        ambient: String,
        #[arg(required = true)]
        pieces: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// `gallery list`, or describe / emit one item.
    Gallery {
        name: String,
        /// Print the item as a pair document.
        #[arg(long)]
        emit: bool,
    },
    /// Run the structural self-checks of the built-in gallery.
    SelfTest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    One,
    Plus,
    Odd,
}

impl From<KindArg> for BoundaryKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::One => BoundaryKind::One,
            KindArg::Plus => BoundaryKind::Plus,
            KindArg::Odd => BoundaryKind::Odd,
        }
    }
}

/// An error message paired with the exit code it maps to.
struct Failure(i32, String);

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure(EXIT_INPUT_ERROR, msg.into())
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Check { input, json, parallel, verbose } => check(&input, json, parallel, verbose, out),
        Command::CheckCone { input, json } => check_cone(&input, json, out),
        Command::Link { input, vertex, json } => show_link(&input, &vertex, json, out),
        Command::Boundary { input, kind } => {
            let doc = load(&input)?;
            let b = doc.pair.x().boundary(kind.into());
            let name = doc.name.as_ref().map(|n| format!("{n}/boundary-{}", kind_name(kind)));
            let pair = Pair::new(b, Complex::empty()).expect("empty A");
            emit(&PairDocument { name, labels: doc.labels, pair }, out);
            Ok(0)
        }
        Command::Subdivide { input, iterations } => {
            let mut doc = load(&input)?;
            for _ in 0..iterations {
                let sd = barycentric_subdivision(&doc.pair);
                let names = if doc.labels.is_empty() {
                    (0..sd.origins.len()).map(|i| sd.name(VertexId(i as u32)).expect("in range")).collect()
                } else {
                    sd.names_with(|v| doc.label(v))
                };
                doc = PairDocument::new(doc.name.map(|n| format!("sd({n})")), Some(names), sd.pair);
            }
            emit(&doc, out);
            Ok(0)
        }
        Command::UnionCheck { ambient, pieces, json } => union(&ambient, &pieces, json, out),
        Command::Gallery { name, emit: e } => show_gallery(&name, e, out),
        Command::SelfTest => {
            let mut ok = true;
            for item in gallery::standard_items() {
                let sc = gallery::self_check(&item);
                ok &= sc.passed();
                out.push_str(&sc.to_string());
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn kind_name(k: KindArg) -> &'static str {
    match k {
        KindArg::One => "one",
        KindArg::Plus => "plus",
        KindArg::Odd => "odd",
    }
}

fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::input(format!("{input}: {e}")))
    }
}

/// Reads a pair document from a file, stdin or the gallery.
fn load(input: &str) -> Result<PairDocument, Failure> {
    load_with(input, None)
}

fn load_with(input: &str, base: Option<&Labels>) -> Result<PairDocument, Failure> {
    if let Some(item) = input.strip_prefix("gallery:") {
        let item = gallery::generate_item(item).map_err(|e| Failure::input(e.to_string()))?;
        return Ok(PairDocument::new(Some(item.name), item.labels, item.pair));
    }
    let text = read_text(input)?;
    io::parse_with_labels(&text, base).map_err(|e| Failure::input(format!("{input}: {e}")))
}

fn emit(doc: &PairDocument, out: &mut String) {
    out.push_str(&doc.to_json());
    out.push('\n');
}

fn write_report(report: &Report, json: bool, verbose: bool, out: &mut String) -> i32 {
    if json {
        out.push_str(&report.to_json());
        out.push('\n');
    } else {
        out.push_str(&report.to_human(verbose));
    }
    report.exit_code()
}

fn check(input: &str, json: bool, parallel: bool, verbose: bool, out: &mut String) -> Outcome {
    let doc = match load(input) {
        Ok(d) => d,
        Err(Failure(_, msg)) if json => {
            let r = Report::input_error(None, msg);
            return Ok(write_report(&r, true, verbose, out));
        }
        Err(f) => return Err(f),
    };
    let exec = if parallel { Execution::Parallel } else { Execution::Sequential };
    let verdict = decision::computable_type_with(&doc.pair, exec);
    Ok(write_report(&Report::new(&doc, verdict), json, verbose, out))
}

fn check_cone(input: &str, json: bool, out: &mut String) -> Outcome {
    let text = read_text(input)?;
    let cone = io::parse_cone(&text).map_err(|e| Failure::input(format!("{input}: {e}")))?;
    let verdict = match decision::cone_pair_mode(&cone.base, &cone.terminals) {
        Ok(v) => v,
        Err(decision::DecisionError::ConeBaseDimension(d)) => Verdict::inapplicable(
            Applicability::DimensionUnsupported,
            format!("cone base has dimension {d}; only graphs are supported"),
        ),
        Err(e) => return Err(Failure::input(e.to_string())),
    };
    let report = Report::with_input(cone.name.clone(), cone.digest(), &cone.labels, verdict);
    Ok(write_report(&report, json, true, out))
}

fn show_link(input: &str, vertex: &str, json: bool, out: &mut String) -> Outcome {
    let doc = load(input)?;
    let v = doc
        .labels
        .lookup(vertex)
        .filter(|v| doc.pair.x().contains_vertex(*v))
        .ok_or_else(|| Failure::input(format!("`{vertex}` is not a vertex of X")))?;
    let m = link::extract_marked_link(&doc.pair, v).map_err(|e| match e {
        LinkError::DimensionUnsupported { .. } | LinkError::InteriorViolation { .. } => {
            Failure(EXIT_INAPPLICABLE, e.to_string())
        }
        other => Failure::input(other.to_string()),
    })?;
    if json {
        out.push_str(&serde_json::to_string_pretty(&m).expect("plain data serializes"));
        out.push('\n');
    } else {
        describe_link(&doc, &m, out);
    }
    Ok(0)
}

fn describe_link(doc: &PairDocument, m: &MarkedLink, out: &mut String) {
    let names = |vs: &mut dyn Iterator<Item = VertexId>| -> String {
        vs.map(|v| doc.label(v)).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(out, "link of {}", doc.label(m.origin));
    let _ = writeln!(out, "  nodes: {{{}}}", names(&mut m.graph.nodes()));
    let edges: Vec<String> = m
        .graph
        .edges()
        .map(|e| format!("{}-{}", doc.label(e.lo()), doc.label(e.hi())))
        .collect();
    let _ = writeln!(out, "  edges: {{{}}}", edges.join(", "));
    let _ = writeln!(out, "  N: {{{}}}", names(&mut m.terminals.iter().copied()));
    let _ = writeln!(out, "  tip in A: {}", if m.tip_in_m { "yes" } else { "no" });
    let failing = m.failing_edges();
    if !failing.is_empty() {
        let edges: Vec<String> = failing
            .iter()
            .map(|e| format!("{}-{}", doc.label(e.lo()), doc.label(e.hi())))
            .collect();
        let _ = writeln!(out, "  edges not on a cycle or N-to-N path: {{{}}}", edges.join(", "));
    }
}

fn union(ambient: &str, pieces: &[String], json: bool, out: &mut String) -> Outcome {
    let doc = load(ambient)?;
    let pieces = pieces
        .iter()
        .map(|p| load_with(p, Some(&doc.labels)).map(|d| d.pair))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = decision::union_check(&doc.pair, &Decomposition { pieces })
        .map_err(|e| Failure::input(e.to_string()))?;
    Ok(write_report(&Report::new(&doc, verdict), json, false, out))
}

fn show_gallery(name: &str, emit_doc: bool, out: &mut String) -> Outcome {
    if name == "list" {
        for e in gallery::CATALOG {
            let n = match e.parameter {
                Some(p) => format!("{}:<{p}>", e.name),
                None => e.name.to_string(),
            };
            let _ = writeln!(out, "{n:<28} {}", e.description);
        }
        return Ok(0);
    }
    let item = gallery::generate_item(name).map_err(|e| Failure::input(e.to_string()))?;
    if emit_doc {
        emit(&PairDocument::new(Some(item.name), item.labels, item.pair), out);
    } else {
        let x = item.pair.x();
        let _ = writeln!(out, "{}: {}", item.name, item.description);
        let _ = writeln!(out, "  f-vector of X: {:?}", x.f_vector());
        let _ = writeln!(out, "  f-vector of A: {:?}", item.pair.a().f_vector());
        let _ = writeln!(out, "  Euler characteristic: {}", x.euler_characteristic());
        let _ = writeln!(out, "  expected: {:?}", item.expected);
    }
    Ok(0)
}
