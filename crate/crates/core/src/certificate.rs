//! Certificates for the cone criterion on a marked link, and their checker.
//!
//! A positive certificate covers every link edge by a cycle or by a path
//! between two distinct terminals, and justifies every isolated link
//! vertex. A negative certificate exhibits an edge `e` and the component `C`
//! of one endpoint in `L - e` that misses the other endpoint and all
//! terminals.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::VertexId;
use crate::graph::Edge;
use crate::link::MarkedLink;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Walk {
    /// Closed walk; the edge from the last vertex back to the first is implied.
    Cycle(Vec<VertexId>),
    Path(Vec<VertexId>),
}

impl Walk {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Walk::Cycle(v) | Walk::Path(v) => v,
        }
    }

    pub fn vertices_mut(&mut self) -> &mut Vec<VertexId> {
        match self {
            Walk::Cycle(v) | Walk::Path(v) => v,
        }
    }

    pub fn steps(&self) -> Vec<(VertexId, VertexId)> {
        let vs = self.vertices();
        let mut out: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        if let (Walk::Cycle(_), Some(first), Some(last)) = (self, vs.first(), vs.last()) {
            if vs.len() > 1 {
                out.push((*last, *first));
            }
        }
        out
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Walk::Cycle(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCover {
    pub edge: Edge,
    pub walk: Walk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsolatedReason {
    Terminal,
    TipInM,
    OtherComponents,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedNode {
    pub vertex: VertexId,
    pub reason: IsolatedReason,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveCertificate {
    pub covers: Vec<EdgeCover>,
    pub isolated: Vec<IsolatedNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NegativeCertificate {
    /// `e` separates `component` (holding one endpoint, no terminal) from the
    /// other endpoint.
    Bridge {
        edge: Edge,
        component: BTreeSet<VertexId>,
    },
    /// The link is one vertex, nothing is fixed but the base point.
    LoneVertex { vertex: VertexId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "polarity", rename_all = "snake_case")]
pub enum Certificate {
    Positive(PositiveCertificate),
    Negative(NegativeCertificate),
}

impl Certificate {
    pub fn is_positive(&self) -> bool {
        matches!(self, Certificate::Positive(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("edge {0} passes; no negative certificate exists for it")]
    NotAFailure(Edge),
    #[error("edge {0} is not an edge of the link")]
    UnknownEdge(Edge),
    #[error("edge {0} lies on no cycle or terminal path")]
    Unavailable(Edge),
    #[error("the link is a lone vertex with no terminals and an unmarked tip")]
    LoneVertex(VertexId),
}

/// Why a certificate was rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Defect {
    #[error("edge {0} is not covered")]
    Uncovered(Edge),
    #[error("edge {0} is covered more than once")]
    DuplicateCover(Edge),
    #[error("covered edge {0} is not in the link")]
    ForeignEdge(Edge),
    #[error("walk for {0} repeats a vertex")]
    NotSimple(Edge),
    #[error("walk for {0} leaves the link")]
    LeavesLink(Edge),
    #[error("walk for {0} does not traverse it")]
    MissesEdge(Edge),
    #[error("cycle for {0} is shorter than three vertices")]
    ShortCycle(Edge),
    #[error("path for {0} does not start and end at two distinct terminals")]
    BadEndpoints(Edge),
    #[error("isolated vertex {0} is not justified")]
    UnjustifiedIsolated(VertexId),
    #[error("vertex {0} is listed as isolated but is not")]
    NotIsolated(VertexId),
    #[error("certificate edge {0} is not in the link")]
    NegativeForeignEdge(Edge),
    #[error("component is not the component of an endpoint of {0} after removing it")]
    WrongComponent(Edge),
    #[error("component contains terminal {0}")]
    TouchesTerminals(VertexId),
    #[error("component contains both endpoints of {0}")]
    NotSeparating(Edge),
    #[error("lone-vertex certificate does not describe this link")]
    NotLoneVertex,
}

/// Covers every edge; fails on the first edge that lies on no cycle or
/// terminal path.
pub fn make_positive_certificate(m: &MarkedLink) -> Result<PositiveCertificate, CertificateError> {
    if let Some(v) = m.is_lone_free_vertex() {
        return Err(CertificateError::LoneVertex(v));
    }
    let g = &m.graph;
    let cycle_free = g.bridges();
    let mut covers = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let walk = if !cycle_free.contains(&e) {
            let back = g
                .shortest_path(e.hi(), Some(e), |v| v == e.lo())
                .expect("non-bridge edge closes a cycle");
            // back runs hi → … → lo; the implied closing step is lo → hi.
            Walk::Cycle(back)
        } else {
            let to_lo = g
                .shortest_path(e.lo(), Some(e), |v| m.terminals.contains(&v))
                .ok_or(CertificateError::Unavailable(e))?;
            let from_hi = g
                .shortest_path(e.hi(), Some(e), |v| m.terminals.contains(&v))
                .ok_or(CertificateError::Unavailable(e))?;
            let mut vs: Vec<VertexId> = to_lo.into_iter().rev().collect();
            vs.extend(from_hi);
            Walk::Path(vs)
        };
        covers.push(EdgeCover { edge: e, walk });
    }
    let several = g.node_count() > 1;
    let isolated = g
        .isolated_nodes()
        .map(|v| {
            let reason = if m.terminals.contains(&v) {
                IsolatedReason::Terminal
            } else if m.tip_in_m {
                IsolatedReason::TipInM
            } else {
                debug_assert!(several);
                IsolatedReason::OtherComponents
            };
            IsolatedNode { vertex: v, reason }
        })
        .collect();
    Ok(PositiveCertificate { covers, isolated })
}

/// Certificate that `e` lies on no cycle and no terminal path. Picks the
/// endpoint whose side avoids the terminals; on a tie, the smaller label.
pub fn make_negative_certificate(m: &MarkedLink, e: Edge) -> Result<NegativeCertificate, CertificateError> {
    if !m.graph.contains_edge(e) {
        return Err(CertificateError::UnknownEdge(e));
    }
    let lo_side = m.graph.component_of(e.lo(), Some(e));
    if lo_side.contains(&e.hi()) {
        return Err(CertificateError::NotAFailure(e));
    }
    let clean = |c: &BTreeSet<VertexId>| c.is_disjoint(&m.terminals);
    if clean(&lo_side) {
        return Ok(NegativeCertificate::Bridge { edge: e, component: lo_side });
    }
    let hi_side = m.graph.component_of(e.hi(), Some(e));
    if clean(&hi_side) {
        return Ok(NegativeCertificate::Bridge { edge: e, component: hi_side });
    }
    Err(CertificateError::NotAFailure(e))
}

/// Negative certificate for a marked link that fails the criterion, if it
/// does. The first failing edge in edge order is used.
pub fn make_failure_certificate(m: &MarkedLink) -> Option<NegativeCertificate> {
    if let Some(v) = m.is_lone_free_vertex() {
        return Some(NegativeCertificate::LoneVertex { vertex: v });
    }
    let e = m.failing_edges().into_iter().next()?;
    Some(make_negative_certificate(m, e).expect("failing edge has a clean side"))
}

pub fn check_certificate(m: &MarkedLink, cert: &Certificate) -> Result<(), Defect> {
    match cert {
        Certificate::Positive(p) => check_positive(m, p),
        Certificate::Negative(n) => check_negative(m, n),
    }
}

pub fn check_positive(m: &MarkedLink, cert: &PositiveCertificate) -> Result<(), Defect> {
    let g = &m.graph;
    let mut covered = BTreeSet::new();
    for cover in &cert.covers {
        let e = cover.edge;
        if !g.contains_edge(e) {
            return Err(Defect::ForeignEdge(e));
        }
        if !covered.insert(e) {
            return Err(Defect::DuplicateCover(e));
        }
        let vs = cover.walk.vertices();
        let distinct: BTreeSet<_> = vs.iter().collect();
        if distinct.len() != vs.len() {
            return Err(Defect::NotSimple(e));
        }
        match &cover.walk {
            Walk::Cycle(_) if vs.len() < 3 => return Err(Defect::ShortCycle(e)),
            Walk::Path(_) => {
                let ends_ok = vs.len() >= 2
                    && m.terminals.contains(&vs[0])
                    && m.terminals.contains(&vs[vs.len() - 1]);
                if !ends_ok {
                    return Err(Defect::BadEndpoints(e));
                }
            }
            _ => {}
        }
        let steps = cover.walk.steps();
        if steps.iter().any(|&(a, b)| !g.has_edge(a, b)) {
            return Err(Defect::LeavesLink(e));
        }
        if !steps
            .iter()
            .any(|&(a, b)| Edge::new(a, b).is_ok_and(|s| s == e))
        {
            return Err(Defect::MissesEdge(e));
        }
    }
    if let Some(e) = g.edges().find(|e| !covered.contains(e)) {
        return Err(Defect::Uncovered(e));
    }

    let listed: BTreeSet<VertexId> = cert.isolated.iter().map(|i| i.vertex).collect();
    for node in &cert.isolated {
        if !g.contains_node(node.vertex) || g.degree(node.vertex) != 0 {
            return Err(Defect::NotIsolated(node.vertex));
        }
        let justified = match node.reason {
            IsolatedReason::Terminal => m.terminals.contains(&node.vertex),
            IsolatedReason::TipInM => m.tip_in_m,
            IsolatedReason::OtherComponents => g.node_count() > 1,
        };
        if !justified {
            return Err(Defect::UnjustifiedIsolated(node.vertex));
        }
    }
    if let Some(v) = g.isolated_nodes().find(|v| !listed.contains(v)) {
        return Err(Defect::UnjustifiedIsolated(v));
    }
    Ok(())
}

pub fn check_negative(m: &MarkedLink, cert: &NegativeCertificate) -> Result<(), Defect> {
    match cert {
        NegativeCertificate::LoneVertex { vertex } => {
            if m.is_lone_free_vertex() == Some(*vertex) {
                Ok(())
            } else {
                Err(Defect::NotLoneVertex)
            }
        }
        NegativeCertificate::Bridge { edge, component } => {
            let e = *edge;
            if !m.graph.contains_edge(e) {
                return Err(Defect::NegativeForeignEdge(e));
            }
            let holds = |v: VertexId| component.contains(&v);
            let start = match (holds(e.lo()), holds(e.hi())) {
                (true, true) => return Err(Defect::NotSeparating(e)),
                (false, false) => return Err(Defect::WrongComponent(e)),
                (true, false) => e.lo(),
                (false, true) => e.hi(),
            };
            if &m.graph.component_of(start, Some(e)) != component {
                return Err(Defect::WrongComponent(e));
            }
            if let Some(t) = component.iter().find(|v| m.terminals.contains(v)) {
                return Err(Defect::TouchesTerminals(*t));
            }
            Ok(())
        }
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined = self
            .vertices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" - ");
        match self {
            Walk::Cycle(vs) => write!(f, "cycle ({joined} - {})", vs[0]),
            Walk::Path(_) => write!(f, "path ({joined})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(v(a), v(b)).unwrap()
    }

    fn marked(edges: &[(u32, u32)], isolated: &[u32], n: &[u32], tip: bool) -> MarkedLink {
        let g = Graph::from_edges(
            isolated.iter().copied().map(v),
            edges.iter().map(|&(a, b)| e(a, b)),
        );
        MarkedLink::new(v(100), g, n.iter().copied().map(v).collect(), tip).unwrap()
    }

    fn barbell(n: &[u32]) -> MarkedLink {
        marked(
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)],
            &[],
            n,
            !n.is_empty(),
        )
    }

    #[test]
    fn triangle_covered_by_its_cycle() {
        let m = marked(&[(1, 2), (2, 3), (1, 3)], &[], &[], false);
        let cert = make_positive_certificate(&m).unwrap();
        assert_eq!(cert.covers.len(), 3);
        for c in &cert.covers {
            assert!(c.walk.is_cycle());
            assert_eq!(c.walk.vertices().len(), 3);
        }
        check_positive(&m, &cert).unwrap();
    }

    #[test]
    fn single_edge_between_terminals() {
        let m = marked(&[(1, 2)], &[], &[1, 2], true);
        let cert = make_positive_certificate(&m).unwrap();
        assert_eq!(cert.covers[0].walk, Walk::Path(vec![v(1), v(2)]));
        check_positive(&m, &cert).unwrap();
    }

    #[test]
    fn barbell_negative() {
        let m = barbell(&[]);
        assert!(matches!(
            make_positive_certificate(&m),
            Err(CertificateError::Unavailable(_))
        ));
        let cert = make_negative_certificate(&m, e(3, 4)).unwrap();
        let NegativeCertificate::Bridge { component, .. } = &cert else { panic!() };
        assert_eq!(component, &[0, 1, 2, 3].map(v).into());
        check_negative(&m, &cert).unwrap();
        assert_eq!(
            make_negative_certificate(&m, e(0, 1)),
            Err(CertificateError::NotAFailure(e(0, 1)))
        );
    }

    #[test]
    fn barbell_with_junction_terminals_passes() {
        let m = barbell(&[2, 4]);
        let cert = make_positive_certificate(&m).unwrap();
        check_positive(&m, &cert).unwrap();
        let arc = cert.covers.iter().find(|c| c.edge == e(2, 3)).unwrap();
        assert_eq!(arc.walk, Walk::Path(vec![v(2), v(3), v(4)]));
    }

    #[test]
    fn negative_side_selection() {
        // a=1 - u=2 - w=3, N = {1}: only w's side avoids N.
        let m = marked(&[(1, 2), (2, 3)], &[], &[1], true);
        let cert = make_negative_certificate(&m, e(2, 3)).unwrap();
        assert_eq!(
            cert,
            NegativeCertificate::Bridge { edge: e(2, 3), component: [v(3)].into() }
        );
        // no terminals: smaller endpoint wins
        let m = marked(&[(4, 7)], &[], &[], false);
        let cert = make_negative_certificate(&m, e(4, 7)).unwrap();
        assert_eq!(
            cert,
            NegativeCertificate::Bridge { edge: e(4, 7), component: [v(4)].into() }
        );
    }

    #[test]
    fn checker_rejects_component_touching_terminals() {
        let m = marked(&[(1, 2), (2, 3)], &[], &[1], true);
        let bad = NegativeCertificate::Bridge { edge: e(2, 3), component: [v(1), v(2)].into() };
        assert_eq!(check_negative(&m, &bad), Err(Defect::TouchesTerminals(v(1))));
    }

    #[test]
    fn isolated_vertices() {
        let m = marked(&[], &[1], &[], false);
        assert_eq!(make_positive_certificate(&m), Err(CertificateError::LoneVertex(v(1))));
        assert_eq!(
            make_failure_certificate(&m),
            Some(NegativeCertificate::LoneVertex { vertex: v(1) })
        );
        let forged = PositiveCertificate {
            covers: vec![],
            isolated: vec![IsolatedNode { vertex: v(1), reason: IsolatedReason::OtherComponents }],
        };
        assert_eq!(check_positive(&m, &forged), Err(Defect::UnjustifiedIsolated(v(1))));

        let m = marked(&[], &[1], &[], true);
        let cert = make_positive_certificate(&m).unwrap();
        assert_eq!(cert.isolated[0].reason, IsolatedReason::TipInM);
        check_positive(&m, &cert).unwrap();

        let m = marked(&[(2, 3), (3, 4), (2, 4)], &[1], &[], false);
        let cert = make_positive_certificate(&m).unwrap();
        assert_eq!(cert.isolated[0].reason, IsolatedReason::OtherComponents);
        check_positive(&m, &cert).unwrap();
    }

    #[test]
    fn checker_rejects_forged_walks() {
        let m = marked(&[(1, 2), (2, 3), (1, 3), (3, 4)], &[], &[], false);
        let forged = PositiveCertificate {
            covers: vec![
                EdgeCover { edge: e(1, 2), walk: Walk::Cycle(vec![v(1), v(2), v(3)]) },
                EdgeCover { edge: e(2, 3), walk: Walk::Cycle(vec![v(1), v(2), v(3)]) },
                EdgeCover { edge: e(1, 3), walk: Walk::Cycle(vec![v(1), v(2), v(3)]) },
                EdgeCover { edge: e(3, 4), walk: Walk::Cycle(vec![v(1), v(3), v(4)]) },
            ],
            isolated: vec![],
        };
        assert_eq!(check_positive(&m, &forged), Err(Defect::LeavesLink(e(3, 4))));
        let mut missing = forged.clone();
        missing.covers.pop();
        assert_eq!(check_positive(&m, &missing), Err(Defect::Uncovered(e(3, 4))));
    }

    #[test]
    fn serde_shapes() {
        let cert = Certificate::Negative(NegativeCertificate::Bridge {
            edge: e(1, 2),
            component: [v(1)].into(),
        });
        let text = serde_json::to_string(&cert).unwrap();
        assert_eq!(text, r#"{"polarity":"negative","kind":"bridge","edge":[1,2],"component":[1]}"#);
        assert_eq!(serde_json::from_str::<Certificate>(&text).unwrap(), cert);
    }
}
