//! Simple undirected graphs, bridge finding, and the cycle-or-terminal-path
//! edge test.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Complex, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("complex has a simplex of dimension {0}; a graph needs dimension at most 1")]
    NotAGraph(usize),
    #[error("terminal {0} is not a vertex of the graph")]
    UnknownTerminal(VertexId),
}

/// Undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[VertexId; 2]", try_from = "[VertexId; 2]")]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: VertexId, w: VertexId) -> Result<Self, GraphError> {
        match u.cmp(&w) {
            std::cmp::Ordering::Less => Ok(Edge(u, w)),
            std::cmp::Ordering::Greater => Ok(Edge(w, u)),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(u)),
        }
    }

    pub fn lo(self) -> VertexId {
        self.0
    }

    pub fn hi(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn other(self, v: VertexId) -> Option<VertexId> {
        if v == self.0 {
            Some(self.1)
        } else if v == self.1 {
            Some(self.0)
        } else {
            None
        }
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl TryFrom<[VertexId; 2]> for Edge {
    type Error = GraphError;

    fn try_from(v: [VertexId; 2]) -> Result<Self, Self::Error> {
        Edge::new(v[0], v[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A finite simple graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    nodes: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            nodes: g.nodes().collect(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        let mut g = Graph::new();
        for v in r.nodes {
            g.add_node(v);
        }
        for e in r.edges {
            g.add_edge(e);
        }
        Ok(g)
    }
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn from_edges<I>(nodes: impl IntoIterator<Item = VertexId>, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new();
        for v in nodes {
            g.add_node(v);
        }
        for e in edges {
            g.add_edge(e);
        }
        g
    }

    /// The 1-skeleton view of a complex of dimension at most one.
    pub fn from_complex(c: &Complex) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for s in c.simplices() {
            match s.vertices() {
                [v] => g.add_node(*v),
                [u, w] => g.add_edge(Edge(*u, *w)),
                _ => return Err(GraphError::NotAGraph(s.dim())),
            }
        }
        Ok(g)
    }

    pub fn add_node(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, e: Edge) {
        self.adj.entry(e.0).or_default().insert(e.1);
        self.adj.entry(e.1).or_default().insert(e.0);
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let a = self.adj.get_mut(&e.0).is_some_and(|s| s.remove(&e.1));
        let b = self.adj.get_mut(&e.1).is_some_and(|s| s.remove(&e.0));
        a && b
    }

    pub fn nodes(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(u, ns)| ns.range(*u..).map(move |w| Edge(*u, *w)))
    }

    pub fn contains_node(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&w))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn isolated_nodes(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.iter().filter(|(_, n)| n.is_empty()).map(|(v, _)| *v)
    }

    /// Nodes reachable from `start`, optionally pretending `skip` is absent.
    pub fn component_of(&self, start: VertexId, skip: Option<Edge>) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        if !self.contains_node(start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if skip.is_some_and(|e| e == Edge::new(u, w).expect("simple graph")) {
                    continue;
                }
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.nodes() {
            if !seen.contains(&v) {
                let comp = self.component_of(v, None);
                seen.extend(comp.iter().copied());
                out.push(comp);
            }
        }
        out
    }

    /// Shortest path from `from` to any node satisfying `goal`, not using
    /// the edge `skip`.
    pub fn shortest_path(
        &self,
        from: VertexId,
        skip: Option<Edge>,
        goal: impl Fn(VertexId) -> bool,
    ) -> Option<Vec<VertexId>> {
        if !self.contains_node(from) {
            return None;
        }
        let mut prev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = BTreeSet::from([from]);
        while let Some(u) = queue.pop_front() {
            if goal(u) {
                let mut path = vec![u];
                let mut cur = u;
                while let Some(&p) = prev.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(u) {
                if skip.is_some_and(|e| e == Edge::new(u, w).expect("simple graph")) {
                    continue;
                }
                if seen.insert(w) {
                    prev.insert(w, u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Edges lying on no cycle, found with one depth-first pass tracking
    /// low-link values.
    pub fn bridges(&self) -> BTreeSet<Edge> {
        let index: BTreeMap<VertexId, usize> =
            self.adj.keys().enumerate().map(|(i, v)| (*v, i)).collect();
        let nodes: Vec<VertexId> = self.adj.keys().copied().collect();
        let adj: Vec<Vec<usize>> = self
            .adj
            .values()
            .map(|ns| ns.iter().map(|w| index[w]).collect())
            .collect();

        let n = nodes.len();
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = BTreeSet::new();
        // (node, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();

        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (u, parent, pos) = *top;
                if pos < adj[u].len() {
                    top.2 += 1;
                    let w = adj[u][pos];
                    if w == parent {
                        continue;
                    }
                    if order[w] == usize::MAX {
                        order[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > order[parent] {
                            out.insert(Edge::new(nodes[u], nodes[parent]).expect("simple graph"));
                        }
                    }
                }
            }
        }
        out
    }

    /// Adds the reserved apex node joined to every terminal.
    pub fn augment_with_apex(&self, terminals: &BTreeSet<VertexId>) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_node(VertexId::SENTINEL);
        for &t in terminals {
            if !self.contains_node(t) {
                return Err(GraphError::UnknownTerminal(t));
            }
            g.add_edge(Edge::new(t, VertexId::SENTINEL)?);
        }
        Ok(g)
    }

    /// Edges lying neither on a cycle nor on a path whose two distinct
    /// endpoints are terminals.
    pub fn failing_edges(&self, terminals: &BTreeSet<VertexId>) -> Result<BTreeSet<Edge>, GraphError> {
        let aug = self.augment_with_apex(terminals)?;
        Ok(aug
            .bridges()
            .into_iter()
            .filter(|e| e.hi() != VertexId::SENTINEL)
            .collect())
    }

    /// Whether `e` lies on a cycle or on a terminal-to-terminal path.
    pub fn edge_passes(&self, terminals: &BTreeSet<VertexId>, e: Edge) -> Result<bool, GraphError> {
        Ok(!self.failing_edges(terminals)?.contains(&e))
    }

    /// Edges minus nodes plus components.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().len() - self.node_count()
    }
}
