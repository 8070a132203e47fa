//! Pair documents, cone documents and verdict reports.
//!
//! A pair document is a small JSON object:
//!
//! ```json
//! {"name": "triangle-pair", "X": [[0,1,2]], "A": [[0,1],[1,2],[0,2]]}
//! ```
//!
//! Simplices may list only generators; both `X` and `A` are closed on
//! parse. Vertices are non-negative integers or strings. Strings resolve
//! through the optional `vertices` label table (position = id); unknown
//! strings are appended to it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::certificate::{Certificate, IsolatedReason, NegativeCertificate};
use crate::complex::{Complex, ComplexError, Pair, Simplex, VertexId};
use crate::decision::{Applicability, Assumption, LocalVerdict, Note, Overall, Verdict};

pub const REPORT_SCHEMA: &str = "conetype-report/1";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex id {0} is out of range")]
    IdOutOfRange(u64),
    #[error("in {field}: {source}")]
    Simplex {
        field: &'static str,
        #[source]
        source: ComplexError,
    },
    #[error("A is not a subcomplex of X: {0}")]
    NotSubcomplex(Simplex),
    #[error("terminal {0} is not a vertex of L")]
    TerminalOutsideBase(String),
    #[error("label `{0}` appears twice in the vertex table")]
    DuplicateLabel(String),
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
enum VertexRef {
    Id(u64),
    Name(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    #[serde(rename = "X")]
    x: Vec<Vec<VertexRef>>,
    #[serde(rename = "A", default)]
    a: Vec<Vec<VertexRef>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCone {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    #[serde(rename = "L")]
    base: Vec<Vec<VertexRef>>,
    #[serde(rename = "N", default)]
    terminals: Vec<VertexRef>,
}

/// Resolves vertex references against a growing label table.
#[derive(Clone, Debug, Default)]
pub struct Labels {
    names: Vec<String>,
    index: BTreeMap<String, u32>,
}

impl Labels {
    pub fn new(names: Vec<String>) -> Result<Self, ParseError> {
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i as u32).is_some() {
                return Err(ParseError::DuplicateLabel(n.clone()));
            }
        }
        Ok(Labels { names, index })
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    fn table(&self) -> Option<Vec<String>> {
        (!self.names.is_empty()).then(|| self.names.clone())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> String {
        self.names.get(v.index()).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Id for a label or decimal id string.
    pub fn lookup(&self, text: &str) -> Option<VertexId> {
        self.index
            .get(text)
            .map(|i| VertexId(*i))
            .or_else(|| text.parse::<u32>().ok().filter(|v| *v != u32::MAX).map(VertexId))
    }

    fn resolve(&mut self, r: &VertexRef) -> Result<VertexId, ParseError> {
        match r {
            VertexRef::Id(i) => u32::try_from(*i)
                .ok()
                .filter(|v| *v != u32::MAX)
                .map(VertexId)
                .ok_or(ParseError::IdOutOfRange(*i)),
            VertexRef::Name(n) => {
                if let Some(i) = self.index.get(n) {
                    return Ok(VertexId(*i));
                }
                let id = self.names.len() as u32;
                self.names.push(n.clone());
                self.index.insert(n.clone(), id);
                Ok(VertexId(id))
            }
        }
    }

    fn simplices(
        &mut self,
        field: &'static str,
        lists: &[Vec<VertexRef>],
    ) -> Result<Vec<Simplex>, ParseError> {
        lists
            .iter()
            .map(|l| {
                let ids = l.iter().map(|r| self.resolve(r)).collect::<Result<Vec<_>, _>>()?;
                Simplex::new(ids).map_err(|source| ParseError::Simplex { field, source })
            })
            .collect()
    }
}

/// A parsed pair with its optional name and label table.
#[derive(Clone, Debug)]
pub struct PairDocument {
    pub name: Option<String>,
    pub labels: Labels,
    pub pair: Pair,
}

impl PairDocument {
    pub fn new(name: Option<String>, labels: Option<Vec<String>>, pair: Pair) -> Self {
        let labels = labels
            .and_then(|l| Labels::new(l).ok())
            .unwrap_or_default();
        PairDocument { name, labels, pair }
    }

    pub fn label(&self, v: VertexId) -> String {
        self.labels.name(v)
    }

    /// Canonical JSON: maximal generators in sorted order, integer ids.
    pub fn to_json(&self) -> String {
        let raw = RawPair {
            name: self.name.clone(),
            vertices: self.labels.table(),
            x: generators(self.pair.x()),
            a: generators(self.pair.a()),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    pub fn digest(&self) -> String {
        digest(&self.to_json())
    }
}

fn generators(c: &Complex) -> Vec<Vec<VertexRef>> {
    c.maximal_simplices()
        .into_iter()
        .map(|s| s.vertices().iter().map(|v| VertexRef::Id(v.0 as u64)).collect())
        .collect()
}

fn digest(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

pub fn parse(text: &str) -> Result<PairDocument, ParseError> {
    parse_with_labels(text, None)
}

/// Parses a pair document; names not in the document's own table are first
/// looked up in `base` (used so piece files share the ambient id space).
pub fn parse_with_labels(text: &str, base: Option<&Labels>) -> Result<PairDocument, ParseError> {
    let raw: RawPair = serde_json::from_str(text)?;
    let mut labels = match (raw.vertices, base) {
        (Some(v), _) => Labels::new(v)?,
        (None, Some(b)) => b.clone(),
        (None, None) => Labels::default(),
    };
    let x = labels.simplices("X", &raw.x)?;
    let a = labels.simplices("A", &raw.a)?;
    let err = |source| ParseError::Simplex { field: "X", source };
    let x = Complex::closure(x).map_err(err)?;
    let a = Complex::closure(a).map_err(|source| ParseError::Simplex { field: "A", source })?;
    let pair = Pair::new(x, a).map_err(|e| match e {
        ComplexError::NotSubcomplex(s) => ParseError::NotSubcomplex(s),
        other => ParseError::Simplex { field: "A", source: other },
    })?;
    Ok(PairDocument {
        name: raw.name,
        labels,
        pair,
    })
}

/// A cone base `L` (dimension at most one) with terminals `N`.
#[derive(Clone, Debug)]
pub struct ConeDocument {
    pub name: Option<String>,
    pub labels: Labels,
    pub base: Complex,
    pub terminals: BTreeSet<VertexId>,
}

impl ConeDocument {
    pub fn to_json(&self) -> String {
        let raw = RawCone {
            name: self.name.clone(),
            vertices: self.labels.table(),
            base: generators(&self.base),
            terminals: self.terminals.iter().map(|v| VertexRef::Id(v.0 as u64)).collect(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    pub fn digest(&self) -> String {
        digest(&self.to_json())
    }
}

pub fn parse_cone(text: &str) -> Result<ConeDocument, ParseError> {
    let raw: RawCone = serde_json::from_str(text)?;
    let mut labels = Labels::new(raw.vertices.unwrap_or_default())?;
    let base = labels.simplices("L", &raw.base)?;
    let base = Complex::closure(base).map_err(|source| ParseError::Simplex { field: "L", source })?;
    let mut terminals = BTreeSet::new();
    for r in &raw.terminals {
        let v = labels.resolve(r)?;
        if !base.contains_vertex(v) {
            return Err(ParseError::TerminalOutsideBase(labels.name(v)));
        }
        terminals.insert(v);
    }
    Ok(ConeDocument {
        name: raw.name,
        labels,
        base,
        terminals,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub digest: String,
}

/// Serialized verdict with tool metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: String,
    pub version: String,
    pub input: InputInfo,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Report {
    pub fn new(doc: &PairDocument, verdict: Verdict) -> Self {
        Report::with_input(doc.name.clone(), doc.digest(), &doc.labels, verdict)
    }

    pub fn with_input(name: Option<String>, digest: String, labels: &Labels, verdict: Verdict) -> Self {
        Report {
            schema: REPORT_SCHEMA.into(),
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input: InputInfo { name, digest },
            labels: labels.names().to_vec(),
            verdict,
        }
    }

    pub fn input_error(name: Option<String>, message: String) -> Self {
        Report::with_input(name, String::new(), &Labels::default(), Verdict::input_error(message))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.verdict)
    }

    fn label(&self, v: VertexId) -> String {
        self.labels.get(v.index()).cloned().unwrap_or_else(|| v.to_string())
    }

    fn labels_of<'a>(&self, vs: impl IntoIterator<Item = &'a VertexId>) -> String {
        let names: Vec<String> = vs.into_iter().map(|v| self.label(*v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Plain-text rendering for terminals.
    pub fn to_human(&self, verbose: bool) -> String {
        let mut out = String::new();
        let v = &self.verdict;
        let name = self.input.name.as_deref().unwrap_or("<unnamed>");
        let _ = writeln!(out, "{name}: {}", overall_text(v.overall));
        if v.applicability != Applicability::Applicable {
            let _ = writeln!(out, "  not decided: {:?}", v.applicability);
        }
        if let Some(d) = &v.detail {
            let _ = writeln!(out, "  {d}");
        }
        if !v.locals.is_empty() {
            let failing = v.failing().count();
            let _ = writeln!(out, "  vertices: {} checked, {} failing", v.locals.len(), failing);
        }
        for l in &v.locals {
            if l.passes && !verbose {
                continue;
            }
            self.write_local(&mut out, l);
        }
        for (i, p) in v.pieces.iter().enumerate() {
            let _ = writeln!(out, "  piece {i}: {}", overall_text(p.overall));
        }
        for a in &v.assumptions {
            let line = match a {
                Assumption::FreeVertexOutsideA(x) => {
                    format!("free vertex {} is not in A", self.label(*x))
                }
                Assumption::TipConvention(x) => format!(
                    "vertex {} passed by the convention for a one-point link with the tip in A",
                    self.label(*x)
                ),
            };
            let _ = writeln!(out, "  note: {line}");
        }
        out
    }

    fn write_local(&self, out: &mut String, l: &LocalVerdict) {
        let status = if l.passes { "passes" } else { "FAILS" };
        let _ = writeln!(out, "  vertex {}: {status}", self.label(l.vertex));
        let _ = writeln!(
            out,
            "    link: {} vertices, {} edges; N = {}; tip in A: {}",
            l.link.graph.node_count(),
            l.link.graph.edge_count(),
            self.labels_of(&l.link.terminals),
            if l.link.tip_in_m { "yes" } else { "no" }
        );
        match &l.certificate {
            Certificate::Negative(NegativeCertificate::Bridge { edge, component }) => {
                let _ = writeln!(
                    out,
                    "    edge {{{}, {}}} is not on a cycle or N-to-N path",
                    self.label(edge.lo()),
                    self.label(edge.hi())
                );
                let _ = writeln!(
                    out,
                    "    component C = {} of L - e avoids N",
                    self.labels_of(component)
                );
            }
            Certificate::Negative(NegativeCertificate::LoneVertex { vertex }) => {
                let _ = writeln!(
                    out,
                    "    link is the single vertex {} with nothing fixed: a free vertex outside A",
                    self.label(*vertex)
                );
            }
            Certificate::Positive(p) => {
                for c in &p.covers {
                    let walk: Vec<String> = c.walk.vertices().iter().map(|x| self.label(*x)).collect();
                    let kind = if c.walk.is_cycle() { "cycle" } else { "N-to-N path" };
                    let _ = writeln!(
                        out,
                        "    edge {{{}, {}}}: {kind} {}",
                        self.label(c.edge.lo()),
                        self.label(c.edge.hi()),
                        walk.join(" - ")
                    );
                }
                for i in &p.isolated {
                    let why = match i.reason {
                        IsolatedReason::Terminal => "in N",
                        IsolatedReason::TipInM => "tip in A",
                        IsolatedReason::OtherComponents => "other link components",
                    };
                    let _ = writeln!(out, "    isolated {}: {why}", self.label(i.vertex));
                }
            }
        }
        for n in &l.notes {
            let text = match n {
                Note::FreeVertexOutsideA => "free vertex outside A",
                Note::IsolatedLinkException => "one-point link exception",
                Note::TipConvention => "tip-in-A convention",
            };
            let _ = writeln!(out, "    flag: {text}");
        }
    }
}

fn overall_text(o: Overall) -> &'static str {
    match o {
        Overall::ComputableType => "computable type",
        Overall::NotComputableType => "NOT computable type",
        Overall::Inapplicable => "inapplicable",
    }
}

pub const EXIT_COMPUTABLE: i32 = 0;
pub const EXIT_NOT_COMPUTABLE: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

pub fn exit_code(v: &Verdict) -> i32 {
    match (v.overall, v.applicability) {
        (Overall::ComputableType, _) => EXIT_COMPUTABLE,
        (Overall::NotComputableType, _) => EXIT_NOT_COMPUTABLE,
        (Overall::Inapplicable, Applicability::InputError) => EXIT_INPUT_ERROR,
        (Overall::Inapplicable, _) => EXIT_INAPPLICABLE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decision;

    #[test]
    fn parse_examples() {
        let doc = parse(r#"{"name":"triangle-pair","X":[[0,1,2]],"A":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(doc.name.as_deref(), Some("triangle-pair"));
        assert_eq!(doc.pair.x().len(), 7);
        assert_eq!(doc.pair.a().len(), 6);

        let doc = parse(r#"{"X":[[0,1]],"A":[]}"#).unwrap();
        assert!(doc.pair.a().is_empty());

        let err = parse(r#"{"X":[[0,1]],"A":[[2]]}"#).unwrap_err();
        assert!(matches!(err, ParseError::NotSubcomplex(_)), "{err}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("{\n  \"X\": [[0,1]],\n  \"A\": [[0,]]\n}").unwrap_err();
        let ParseError::Syntax { line, .. } = err else { panic!("{err}") };
        assert_eq!(line, 3);
        assert!(matches!(parse(r#"{"X":[[0,1.5]]}"#), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(r#"{"X":[[-1]]}"#), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(r#"{"X":[[0]],"B":[]}"#), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(r#"{"X":[[0,0]]}"#), Err(ParseError::Simplex { .. })));
        assert!(matches!(parse(r#"{"X":[[]]}"#), Err(ParseError::Simplex { .. })));
        assert!(matches!(parse(r#"{"X":[[4294967295]]}"#), Err(ParseError::IdOutOfRange(_))));
    }

    #[test]
    fn names_resolve_through_table() {
        let doc = parse(r#"{"vertices":["a","b"],"X":[["a","b","c"]],"A":[["c"]]}"#).unwrap();
        assert_eq!(doc.labels.names(), &["a", "b", "c"]);
        assert!(doc.pair.a().contains_vertex(VertexId(2)));
        assert_eq!(doc.label(VertexId(1)), "b");
        assert!(matches!(
            parse(r#"{"vertices":["a","a"],"X":[[0]]}"#),
            Err(ParseError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn canonical_serialization() {
        let a = parse(r#"{"X":[[2,1,0],[0,1],[3]],"A":[[1],[0]]}"#).unwrap();
        let b = parse(r#"{"X":[[3],[0,2,1]],"A":[[0],[1],[1]]}"#).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_json(), r#"{"X":[[0,1,2],[3]],"A":[[0],[1]]}"#);
        let again = parse(&a.to_json()).unwrap();
        assert_eq!(again.pair, a.pair);
        assert_eq!(a.digest(), b.digest());
    }

    #[test]
    fn cone_documents() {
        let c = parse_cone(r#"{"L":[[0,1],[1,2]],"N":[0,2]}"#).unwrap();
        assert_eq!(c.terminals.len(), 2);
        assert!(matches!(
            parse_cone(r#"{"L":[[0,1]],"N":[5]}"#),
            Err(ParseError::TerminalOutsideBase(_))
        ));
    }

    #[test]
    fn report_round_trip_and_exit_codes() {
        let doc = parse(r#"{"name":"seg","X":[[0,1]]}"#).unwrap();
        let report = Report::new(&doc, decision::computable_type(&doc.pair));
        assert_eq!(report.exit_code(), EXIT_NOT_COMPUTABLE);
        let text = report.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), report);
        assert!(report.to_human(false).contains("free vertex outside A"));

        let err = Report::input_error(None, "boom".into());
        assert_eq!(err.exit_code(), EXIT_INPUT_ERROR);
        assert_eq!(Report::from_json(&err.to_json()).unwrap(), err);
    }
}
