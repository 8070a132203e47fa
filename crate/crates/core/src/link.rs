//! Local cone pairs of a 2-dimensional simplicial pair, read as marked
//! graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Pair, Simplex, VertexId};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} lies in the {dim}-simplex {simplex}; links must be graphs")]
    DimensionUnsupported {
        vertex: VertexId,
        simplex: Simplex,
        dim: usize,
    },
    #[error("the link of {vertex} in A contains the edge {edge}, so A has non-empty interior")]
    InteriorViolation { vertex: VertexId, edge: Edge },
    #[error("terminals are non-empty but the cone tip is not marked")]
    TipNotMarked,
}

/// The link graph `L` of a vertex, the terminals `N` coming from `A`, and
/// whether the cone tip itself lies in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedLink {
    pub origin: VertexId,
    pub graph: Graph,
    pub terminals: BTreeSet<VertexId>,
    pub tip_in_m: bool,
}

impl MarkedLink {
    pub fn new(
        origin: VertexId,
        graph: Graph,
        terminals: BTreeSet<VertexId>,
        tip_in_m: bool,
    ) -> Result<Self, LinkError> {
        if let Some(t) = terminals.iter().find(|t| !graph.contains_node(**t)) {
            return Err(GraphError::UnknownTerminal(*t).into());
        }
        if !terminals.is_empty() && !tip_in_m {
            return Err(LinkError::TipNotMarked);
        }
        Ok(MarkedLink {
            origin,
            graph,
            terminals,
            tip_in_m,
        })
    }

    pub fn failing_edges(&self) -> BTreeSet<Edge> {
        self.graph
            .failing_edges(&self.terminals)
            .expect("terminals are nodes by construction")
    }

    pub fn edge_passes(&self, e: Edge) -> bool {
        !self.failing_edges().contains(&e)
    }

    /// A single link vertex, no terminals, tip outside `M`: the free-vertex
    /// situation, whose cone is a segment with only its far end fixed.
    pub fn is_lone_free_vertex(&self) -> Option<VertexId> {
        let mut nodes = self.graph.nodes();
        match (nodes.next(), nodes.next()) {
            (Some(u), None) if self.terminals.is_empty() && !self.tip_in_m => Some(u),
            _ => None,
        }
    }
}

/// Local cone pair at `v`: `L = link(X, v)`, `N = vertices of link(A, v)`,
/// tip marked iff `v ∈ A`.
pub fn extract_marked_link(pair: &Pair, v: VertexId) -> Result<MarkedLink, LinkError> {
    let link_x = pair.x().link(v)?;
    if let Some(s) = link_x.simplices().find(|s| s.dim() >= 2) {
        let simplex = s.with_vertex(v).expect("link simplices avoid v");
        return Err(LinkError::DimensionUnsupported {
            vertex: v,
            dim: simplex.dim(),
            simplex,
        });
    }
    let graph = Graph::from_complex(&link_x)?;
    let tip_in_m = pair.a().contains_vertex(v);
    let terminals = if tip_in_m {
        let link_a = pair.a().link(v)?;
        if let Some(s) = link_a.simplices().find(|s| s.dim() >= 1) {
            let vs = s.vertices();
            return Err(LinkError::InteriorViolation {
                vertex: v,
                edge: Edge::new(vs[0], vs[1])?,
            });
        }
        link_a.vertices().collect()
    } else {
        BTreeSet::new()
    };
    MarkedLink::new(v, graph, terminals, tip_in_m)
}

/// Marked links of every vertex, computed in one pass over the simplices.
pub fn extract_all(pair: &Pair) -> Result<Vec<MarkedLink>, LinkError> {
    let mut graphs: BTreeMap<VertexId, Graph> = BTreeMap::new();
    for v in pair.x().vertices() {
        graphs.insert(v, Graph::new());
    }
    for s in pair.x().simplices() {
        match s.vertices() {
            [_] => {}
            &[u, w] => {
                graphs.get_mut(&u).expect("closed").add_node(w);
                graphs.get_mut(&w).expect("closed").add_node(u);
            }
            &[a, b, c] => {
                for (tip, p, q) in [(a, b, c), (b, a, c), (c, a, b)] {
                    graphs.get_mut(&tip).expect("closed").add_edge(Edge::new(p, q)?);
                }
            }
            vs => {
                return Err(LinkError::DimensionUnsupported {
                    vertex: vs[0],
                    simplex: s.clone(),
                    dim: s.dim(),
                })
            }
        }
    }
    let mut terminals: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for s in pair.a().simplices() {
        match s.vertices() {
            [_] => {}
            &[u, w] => {
                terminals.entry(u).or_default().insert(w);
                terminals.entry(w).or_default().insert(u);
            }
            vs => {
                return Err(LinkError::InteriorViolation {
                    vertex: vs[0],
                    edge: Edge::new(vs[1], vs[2])?,
                })
            }
        }
    }
    graphs
        .into_iter()
        .map(|(v, g)| {
            let n = terminals.remove(&v).unwrap_or_default();
            MarkedLink::new(v, g, n, pair.a().contains_vertex(v))
        })
        .collect()
}
