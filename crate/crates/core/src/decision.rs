//! Computable-type verdicts for simplicial pairs, assembled from the cone
//! criterion at every vertex.
//!
//! For a pair `(X, A)` where `A` has empty interior and every star has
//! dimension at most two, the pair has computable type exactly when every
//! local cone pair has the surjection property. The local test is the graph
//! criterion: every link edge lies on a cycle or on a path joining two
//! distinct terminals. One configuration sits outside that criterion: a
//! link made of one vertex, with no terminals and the tip outside `A`,
//! always fails (it is a free vertex not in `A`).

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{
    self, Certificate, NegativeCertificate, PositiveCertificate,
};
use crate::complex::{BoundaryKind, Complex, ComplexError, Pair, Simplex, VertexId};
use crate::graph::{Graph, GraphError};
use crate::link::{self, LinkError, MarkedLink};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecisionError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error("cone base must have dimension at most 1, found a {0}-simplex")]
    ConeBaseDimension(usize),
    #[error("decomposition does not cover the pair: {0}")]
    CoverViolation(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Note {
    /// The vertex is a free vertex of `X` outside `A`.
    FreeVertexOutsideA,
    /// Failed only because the link is a lone vertex with nothing fixed.
    IsolatedLinkException,
    /// Passed only because the tip lies in `A` while the link is one vertex
    /// with no terminals.
    TipConvention,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalVerdict {
    pub vertex: VertexId,
    pub passes: bool,
    pub link: MarkedLink,
    pub certificate: Certificate,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    Applicable,
    EmptyInteriorViolated,
    DimensionUnsupported,
    InputError,
    /// A union check with some piece not known to have computable type; the
    /// union test only runs in one direction.
    UnionInconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    ComputableType,
    NotComputableType,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "flag", content = "vertex", rename_all = "snake_case")]
pub enum Assumption {
    /// Standing assumption that `A` holds every free vertex of `X` is broken
    /// at this vertex.
    FreeVertexOutsideA(VertexId),
    /// Some verdict relied on the tip-in-`A` convention for one-vertex links.
    TipConvention(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub applicability: Applicability,
    pub overall: Overall,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default)]
    pub locals: Vec<LocalVerdict>,
    #[serde(default)]
    pub assumptions: Vec<Assumption>,
    /// Per-piece verdicts for a union check.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<Verdict>,
}

impl Verdict {
    pub fn inapplicable(applicability: Applicability, detail: impl Into<String>) -> Self {
        Verdict {
            applicability,
            overall: Overall::Inapplicable,
            detail: Some(detail.into()),
            locals: Vec::new(),
            assumptions: Vec::new(),
            pieces: Vec::new(),
        }
    }

    pub fn input_error(detail: impl Into<String>) -> Self {
        Verdict::inapplicable(Applicability::InputError, detail)
    }

    fn from_locals(locals: Vec<LocalVerdict>, assumptions: Vec<Assumption>) -> Self {
        let overall = if locals.iter().all(|l| l.passes) {
            Overall::ComputableType
        } else {
            Overall::NotComputableType
        };
        Verdict {
            applicability: Applicability::Applicable,
            overall,
            detail: None,
            locals,
            assumptions,
            pieces: Vec::new(),
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &LocalVerdict> + '_ {
        self.locals.iter().filter(|l| !l.passes)
    }

    pub fn is_computable_type(&self) -> bool {
        self.overall == Overall::ComputableType
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Sequential,
    Parallel,
}

/// Surjection property of the cone pair over a marked link, with its
/// certificate.
pub fn cone_surjection_property(m: &MarkedLink) -> (bool, Certificate) {
    match certificate::make_failure_certificate(m) {
        Some(neg) => (false, Certificate::Negative(neg)),
        None => {
            let pos = certificate::make_positive_certificate(m)
                .expect("no failing edge, so every edge has a cover");
            (true, Certificate::Positive(pos))
        }
    }
}

fn local_verdict(m: MarkedLink, free_vertices: &BTreeSet<VertexId>) -> LocalVerdict {
    let (passes, certificate) = cone_surjection_property(&m);
    let mut notes = Vec::new();
    if free_vertices.contains(&m.origin) && !m.tip_in_m {
        notes.push(Note::FreeVertexOutsideA);
    }
    if matches!(certificate, Certificate::Negative(NegativeCertificate::LoneVertex { .. })) {
        notes.push(Note::IsolatedLinkException);
    }
    if passes && relies_on_tip_convention(&m) {
        notes.push(Note::TipConvention);
    }
    LocalVerdict {
        vertex: m.origin,
        passes,
        link: m,
        certificate,
        notes,
    }
}

fn relies_on_tip_convention(m: &MarkedLink) -> bool {
    m.tip_in_m && m.terminals.is_empty() && m.graph.node_count() == 1
}

pub fn computable_type(pair: &Pair) -> Verdict {
    computable_type_with(pair, Execution::Sequential)
}

/// Decision for a pair. `Execution::Parallel` decides vertices concurrently;
/// local verdicts are always returned in vertex order.
pub fn computable_type_with(pair: &Pair, exec: Execution) -> Verdict {
    if let Some(m) = pair.interior_witness() {
        return Verdict::inapplicable(
            Applicability::EmptyInteriorViolated,
            format!("A contains the maximal simplex {m} of X"),
        );
    }
    if let Some(s) = pair.x().simplices().find(|s| s.dim() >= 3) {
        return Verdict::inapplicable(
            Applicability::DimensionUnsupported,
            format!("X contains the {}-simplex {s}; links must be graphs", s.dim()),
        );
    }
    let links = match link::extract_all(pair) {
        Ok(l) => l,
        Err(e) => return Verdict::input_error(e.to_string()),
    };
    let free = pair.x().free_vertices();
    let locals: Vec<LocalVerdict> = match exec {
        Execution::Sequential => links.into_iter().map(|m| local_verdict(m, &free)).collect(),
        Execution::Parallel => links.into_par_iter().map(|m| local_verdict(m, &free)).collect(),
    };
    let mut assumptions: Vec<Assumption> = free
        .iter()
        .filter(|v| !pair.a().contains_vertex(**v))
        .map(|v| Assumption::FreeVertexOutsideA(*v))
        .collect();
    assumptions.extend(
        locals
            .iter()
            .filter(|l| l.notes.contains(&Note::TipConvention))
            .map(|l| Assumption::TipConvention(l.vertex)),
    );
    Verdict::from_locals(locals, assumptions)
}

/// Direct decision for the cone pair `cone(L, N)`. The tip is marked
/// whenever `N` is non-empty, since the cone over `N` contains it.
pub fn cone_pair_mode(base: &Complex, terminals: &BTreeSet<VertexId>) -> Result<Verdict, DecisionError> {
    if let Some(d) = base.dimension().filter(|d| *d >= 2) {
        return Err(DecisionError::ConeBaseDimension(d));
    }
    let graph = Graph::from_complex(base)?;
    let tip = base
        .vertices()
        .max()
        .map_or(VertexId(0), |v| VertexId(v.0 + 1));
    let m = MarkedLink::new(tip, graph, terminals.clone(), !terminals.is_empty())?;
    let local = local_verdict(m, &BTreeSet::new());
    let assumptions = if local.notes.contains(&Note::TipConvention) {
        vec![Assumption::TipConvention(tip)]
    } else {
        Vec::new()
    };
    Ok(Verdict::from_locals(vec![local], assumptions))
}

/// Pieces whose union is an ambient pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<Pair>,
}

impl Decomposition {
    pub fn validate(&self, ambient: &Pair) -> Result<(), DecisionError> {
        let mut x = BTreeSet::new();
        let mut a = BTreeSet::new();
        for p in &self.pieces {
            x.extend(p.x().simplices().cloned());
            a.extend(p.a().simplices().cloned());
        }
        if &x != ambient.x().simplex_set() {
            return Err(DecisionError::CoverViolation(first_difference(&x, ambient.x().simplex_set(), "X")));
        }
        if &a != ambient.a().simplex_set() {
            return Err(DecisionError::CoverViolation(first_difference(&a, ambient.a().simplex_set(), "A")));
        }
        Ok(())
    }
}

fn first_difference(union: &BTreeSet<Simplex>, ambient: &BTreeSet<Simplex>, which: &str) -> String {
    if let Some(s) = ambient.difference(union).next() {
        format!("simplex {s} of ambient {which} is in no piece")
    } else if let Some(s) = union.difference(ambient).next() {
        format!("piece simplex {s} is not in ambient {which}")
    } else {
        unreachable!("sets differ")
    }
}

/// Sufficient condition: if every piece has computable type, so does the
/// union. Anything else is inconclusive.
pub fn union_check(pair: &Pair, decomposition: &Decomposition) -> Result<Verdict, DecisionError> {
    decomposition.validate(pair)?;
    let pieces: Vec<Verdict> = decomposition.pieces.iter().map(computable_type).collect();
    let all = pieces.iter().all(Verdict::is_computable_type);
    let mut v = if all {
        Verdict {
            applicability: Applicability::Applicable,
            overall: Overall::ComputableType,
            detail: None,
            locals: Vec::new(),
            assumptions: Vec::new(),
            pieces: Vec::new(),
        }
    } else {
        let bad = pieces.iter().position(|p| !p.is_computable_type()).expect("some piece");
        Verdict::inapplicable(
            Applicability::UnionInconclusive,
            format!("piece {bad} is not known to have computable type; the union test is one-directional"),
        )
    };
    v.pieces = pieces;
    Ok(v)
}

/// `(X, ∂₊X)` with its decomposition into maximal simplices and their
/// boundaries.
pub fn plus_boundary_pair(x: &Complex) -> (Pair, Decomposition) {
    let boundary = x.boundary(BoundaryKind::Plus);
    let pair = Pair::new(x.clone(), boundary).expect("boundary is a subcomplex");
    let pieces = x
        .maximal_simplices()
        .into_iter()
        .map(|m| {
            let cell = Complex::closure([m.clone()]).expect("valid simplex");
            let sphere = Complex::closure(m.facets()).expect("valid faces");
            Pair::new(cell, sphere).expect("boundary of a simplex lies in it")
        })
        .collect();
    (pair, Decomposition { pieces })
}

/// Consistency of a verdict with its own locals and certificates.
pub fn audit(v: &Verdict) -> Result<(), String> {
    if v.applicability != Applicability::Applicable {
        return if v.overall == Overall::Inapplicable {
            Ok(())
        } else {
            Err("inapplicable verdict with a definite answer".into())
        };
    }
    let all = v.locals.iter().all(|l| l.passes);
    let expected = if all { Overall::ComputableType } else { Overall::NotComputableType };
    if v.pieces.is_empty() && v.overall != expected {
        return Err(format!("overall {:?} disagrees with locals", v.overall));
    }
    for l in &v.locals {
        if l.passes != l.certificate.is_positive() {
            return Err(format!("vertex {} has a certificate of the wrong polarity", l.vertex));
        }
        certificate::check_certificate(&l.link, &l.certificate)
            .map_err(|d| format!("vertex {}: {d}", l.vertex))?;
    }
    Ok(())
}

impl LocalVerdict {
    pub fn positive(&self) -> Option<&PositiveCertificate> {
        match &self.certificate {
            Certificate::Positive(p) => Some(p),
            Certificate::Negative(_) => None,
        }
    }

    pub fn negative(&self) -> Option<&NegativeCertificate> {
        match &self.certificate {
            Certificate::Negative(n) => Some(n),
            Certificate::Positive(_) => None,
        }
    }
}
