//! Built-in example pairs with structural self-checks.

mod bing;
mod dunce;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::complex::{BoundaryKind, Complex, Pair, VertexId};
use crate::decision::{self, Overall};
use crate::graph::{Edge, Graph};
use crate::link;

pub use dunce::CORNER as DUNCE_CORNER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GalleryError {
    #[error("unknown gallery item `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
}

/// Structural facts a gallery item is expected to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Euler(i64),
    VertexCount(usize),
    /// `boundary(X, one)` is empty.
    FreeBoundaryEmpty,
    /// `boundary(X, one)` is a single cycle.
    FreeBoundaryIsCycle,
    /// Every vertex link is one cycle.
    AllLinksCycles,
    /// The link at `vertex` is two disjoint cycles joined by a path of
    /// `arc_edges` edges.
    TwoCyclesJoinedByArc { vertex: VertexId, arc_edges: usize },
    /// Every link is connected and bridgeless with the given cycle rank.
    LinkRanks(BTreeMap<VertexId, usize>),
    /// Number of vertices whose link has the given cycle rank.
    RankCount { rank: usize, count: usize },
    /// The failing vertices of the decision are exactly these.
    FailingVertices(BTreeSet<VertexId>),
}

#[derive(Clone, Debug)]
pub struct NamedPair {
    pub name: String,
    pub pair: Pair,
    pub labels: Option<Vec<String>>,
    pub description: &'static str,
    pub expected: Overall,
    pub facts: Vec<Fact>,
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: Option<&'static str>,
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "simplex", parameter: Some("n"), description: "closed n-simplex, A empty" },
    CatalogEntry { name: "sphere", parameter: Some("n"), description: "boundary of the (n+1)-simplex, A empty" },
    CatalogEntry { name: "ball_pair", parameter: Some("n<=2"), description: "closed n-simplex with its boundary sphere as A" },
    CatalogEntry { name: "star", parameter: Some("n>=1"), description: "star with n branches, A the branch endpoints (both ends when n = 1)" },
    CatalogEntry { name: "n_squares", parameter: Some("n>=2"), description: "n squares sharing one edge, A the other edges" },
    CatalogEntry { name: "dunce_hat", parameter: None, description: "dunce hat, A empty" },
    CatalogEntry { name: "dunce_hat_with_A", parameter: None, description: "dunce hat with the glued edge as A" },
    CatalogEntry { name: "bing_house", parameter: None, description: "Bing's house with two rooms, A empty" },
    CatalogEntry { name: "mobius_pair", parameter: None, description: "Moebius strip with its boundary circle as A" },
    CatalogEntry { name: "mobius_bare", parameter: None, description: "Moebius strip, A empty" },
    CatalogEntry { name: "torus", parameter: None, description: "9-vertex torus, A empty" },
    CatalogEntry { name: "cylinder_theta_pair", parameter: None, description: "cylinder over two circles joined by an arc, A the two bases" },
    CatalogEntry { name: "segment_bare", parameter: None, description: "closed segment, A empty" },
    CatalogEntry { name: "graph", parameter: Some("edges, e.g. 0-1,1-2,2-0,2-3"), description: "finite graph with its degree-1 vertices as A" },
];

fn invalid(name: &str, reason: impl Into<String>) -> GalleryError {
    GalleryError::InvalidParameter { name: name.into(), reason: reason.into() }
}

fn numeric(name: &str, param: Option<&str>) -> Result<u32, GalleryError> {
    let p = param.ok_or_else(|| invalid(name, "missing parameter"))?;
    p.parse().map_err(|_| invalid(name, format!("`{p}` is not a non-negative integer")))
}

/// Parses `name` or `name:param`.
pub fn generate_item(item: &str) -> Result<NamedPair, GalleryError> {
    match item.split_once(':') {
        Some((name, param)) => generate(name, Some(param)),
        None => generate(item, None),
    }
}

pub fn generate(name: &str, param: Option<&str>) -> Result<NamedPair, GalleryError> {
    let entry = CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| GalleryError::UnknownName(name.into()))?;
    if entry.parameter.is_none() && param.is_some() {
        return Err(invalid(name, "takes no parameter"));
    }
    let description = entry.description;
    let full_name = match param {
        Some(p) => format!("{name}:{p}"),
        None => name.to_string(),
    };
    let mut np = match name {
        "simplex" => {
            let n = numeric(name, param)?;
            if n > 8 {
                return Err(invalid(name, "n must be at most 8"));
            }
            let x = Complex::from_lists([0..=n]).expect("simplex");
            let expected = match n {
                0 => Overall::ComputableType,
                1 | 2 => Overall::NotComputableType,
                _ => Overall::Inapplicable,
            };
            let facts = vec![Fact::Euler(1), Fact::VertexCount(n as usize + 1)];
            item(Pair::new(x, Complex::empty()).expect("empty A"), expected, facts)
        }
        "sphere" => {
            let n = numeric(name, param)?;
            if n > 7 {
                return Err(invalid(name, "n must be at most 7"));
            }
            let x = Complex::closure(
                crate::complex::Simplex::new(0..=n + 1).expect("simplex").facets(),
            )
            .expect("faces");
            let expected = if n <= 2 { Overall::ComputableType } else { Overall::Inapplicable };
            let mut facts = vec![
                Fact::Euler(if n % 2 == 0 { 2 } else { 0 }),
                Fact::VertexCount(n as usize + 2),
                Fact::FreeBoundaryEmpty,
            ];
            if n == 2 {
                facts.push(Fact::AllLinksCycles);
            }
            item(Pair::new(x, Complex::empty()).expect("empty A"), expected, facts)
        }
        "ball_pair" => {
            let n = numeric(name, param)?;
            if n > 2 {
                return Err(invalid(name, "n must be at most 2"));
            }
            let cell = crate::complex::Simplex::new(0..=n).expect("simplex");
            let x = Complex::closure([cell.clone()]).expect("simplex");
            let a = Complex::closure(cell.facets()).expect("faces");
            item(Pair::new(x, a).expect("boundary"), Overall::ComputableType, vec![Fact::Euler(1)])
        }
        "star" => {
            let n = numeric(name, param)?;
            if n == 0 {
                return Err(invalid(name, "n must be at least 1"));
            }
            let x = Complex::from_lists((1..=n).map(|i| [0, i])).expect("edges");
            let mut a_gens: Vec<Vec<u32>> = (1..=n).map(|i| vec![i]).collect();
            if n == 1 {
                a_gens.push(vec![0]);
            }
            let a = Complex::from_lists(a_gens).expect("vertices");
            item(
                Pair::new(x, a).expect("leaves"),
                Overall::ComputableType,
                vec![Fact::Euler(1), Fact::VertexCount(n as usize + 1)],
            )
        }
        "n_squares" => {
            let n = numeric(name, param)?;
            if n < 2 {
                return Err(invalid(name, "n must be at least 2"));
            }
            item(n_squares(n), Overall::ComputableType, vec![Fact::Euler(1)])
        }
        "dunce_hat" => {
            let mut np = item(
                dunce::pair(false),
                Overall::NotComputableType,
                vec![
                    Fact::Euler(1),
                    Fact::FreeBoundaryEmpty,
                    Fact::TwoCyclesJoinedByArc { vertex: dunce::CORNER, arc_edges: 3 },
                    Fact::FailingVertices([dunce::CORNER].into()),
                ],
            );
            np.labels = Some(dunce::labels());
            np
        }
        "dunce_hat_with_A" => {
            let mut np = item(
                dunce::pair(true),
                Overall::ComputableType,
                vec![
                    Fact::Euler(1),
                    Fact::FreeBoundaryEmpty,
                    Fact::TwoCyclesJoinedByArc { vertex: dunce::CORNER, arc_edges: 3 },
                ],
            );
            np.labels = Some(dunce::labels());
            np
        }
        "bing_house" => {
            let h = bing::build();
            let mut np = item(
                h.pair,
                Overall::ComputableType,
                vec![
                    Fact::Euler(1),
                    Fact::FreeBoundaryEmpty,
                    Fact::LinkRanks(h.expected_ranks),
                    Fact::RankCount { rank: 3, count: 2 },
                ],
            );
            np.labels = Some(h.labels);
            np
        }
        "mobius_pair" | "mobius_bare" => {
            let x = Complex::from_lists((0..5u32).map(|i| [i, (i + 1) % 5, (i + 2) % 5])).expect("strip");
            let (a, expected) = if name == "mobius_pair" {
                (x.boundary(BoundaryKind::One), Overall::ComputableType)
            } else {
                (Complex::empty(), Overall::NotComputableType)
            };
            item(
                Pair::new(x, a).expect("boundary"),
                expected,
                vec![Fact::Euler(0), Fact::FreeBoundaryIsCycle],
            )
        }
        "torus" => {
            let at = |i: u32, j: u32| 3 * (i % 3) + (j % 3);
            let mut tris = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    tris.push([at(i, j), at(i + 1, j), at(i + 1, j + 1)]);
                    tris.push([at(i, j), at(i, j + 1), at(i + 1, j + 1)]);
                }
            }
            let x = Complex::from_lists(tris).expect("torus");
            item(
                Pair::new(x, Complex::empty()).expect("empty A"),
                Overall::ComputableType,
                vec![Fact::Euler(0), Fact::VertexCount(9), Fact::FreeBoundaryEmpty, Fact::AllLinksCycles],
            )
        }
        "cylinder_theta_pair" => item(cylinder_theta(), Overall::ComputableType, vec![Fact::Euler(-1)]),
        "segment_bare" => item(
            Pair::from_lists([[0u32, 1]], Vec::<Vec<u32>>::new()).expect("segment"),
            Overall::NotComputableType,
            vec![Fact::Euler(1), Fact::FailingVertices([VertexId(0), VertexId(1)].into())],
        ),
        "graph" => {
            let edges = param.ok_or_else(|| invalid(name, "missing edge list"))?;
            let pair = graph_pair(edges).map_err(|r| invalid(name, r))?;
            item(pair, Overall::ComputableType, vec![])
        }
        _ => unreachable!("catalog and generator agree"),
    };
    np.name = full_name;
    np.description = description;
    Ok(np)
}

fn item(pair: Pair, expected: Overall, facts: Vec<Fact>) -> NamedPair {
    NamedPair {
        name: String::new(),
        pair,
        labels: None,
        description: "",
        expected,
        facts,
    }
}

/// Squares `e0 e1 o_i1 o_i0` sharing the edge `e0 e1`, each coned from the
/// midpoint `c` of the shared edge. `A` is every edge off the shared one.
fn n_squares(n: u32) -> Pair {
    let (c, e0, e1) = (0u32, 1u32, 2u32);
    let mut x = Vec::new();
    let mut a = Vec::new();
    for i in 0..n {
        let o0 = 3 + 2 * i;
        let o1 = o0 + 1;
        x.extend([[c, e0, o0], [c, o0, o1], [c, o1, e1]]);
        a.extend([[e0, o0], [o0, o1], [o1, e1]]);
    }
    Pair::from_lists(x, a).expect("squares")
}

/// Cylinder `L × [0,1]` over two triangles joined by a two-edge arc, with
/// both bases as `A`.
fn cylinder_theta() -> Pair {
    let base: [(u32, u32); 8] = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)];
    let top = |v: u32| v + 7;
    let mut x = Vec::new();
    let mut a = Vec::new();
    for (p, q) in base {
        x.push([p, q, top(q)]);
        x.push([p, top(p), top(q)]);
        a.push([p, q]);
        a.push([top(p), top(q)]);
    }
    Pair::from_lists(x, a).expect("cylinder")
}

/// `0-1,1-2,4` style list: edges, plus lone integers for isolated vertices.
pub fn graph_pair(edges: &str) -> Result<Pair, String> {
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for part in edges.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let ids = part
            .split('-')
            .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad vertex `{t}`")))
            .collect::<Result<Vec<_>, _>>()?;
        if ids.len() > 2 {
            return Err(format!("`{part}` is not an edge"));
        }
        gens.push(ids);
    }
    if gens.is_empty() {
        return Err("empty graph".into());
    }
    let x = Complex::from_lists(gens).map_err(|e| e.to_string())?;
    if x.dimension() > Some(1) {
        return Err("not a graph".into());
    }
    let g = Graph::from_complex(&x).map_err(|e| e.to_string())?;
    let leaves = g.nodes().filter(|v| g.degree(*v) == 1).map(|v| [v]);
    let a = Complex::from_lists(leaves).map_err(|e| e.to_string())?;
    Pair::new(x, a).map_err(|e| e.to_string())
}

/// One instance of every catalog item, with small parameters.
pub fn standard_items() -> Vec<NamedPair> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((0..=2).map(|n| format!("simplex:{n}")));
    specs.extend((0..=2).map(|n| format!("sphere:{n}")));
    specs.extend((0..=2).map(|n| format!("ball_pair:{n}")));
    specs.extend((1..=6).map(|n| format!("star:{n}")));
    specs.extend((2..=6).map(|n| format!("n_squares:{n}")));
    for name in [
        "dunce_hat",
        "dunce_hat_with_A",
        "bing_house",
        "mobius_pair",
        "mobius_bare",
        "torus",
        "cylinder_theta_pair",
        "segment_bare",
    ] {
        specs.push(name.into());
    }
    specs.push("graph:0-1,1-2,2-0,2-3,3-4,3-5".into());
    specs.push("graph:0-1,1-2,2-3,3-0,0-2,4-5".into());
    specs
        .iter()
        .map(|s| generate_item(s).expect("standard items are valid"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SelfCheck {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SelfCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for SelfCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.passed() { "ok" } else { "FAILED" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {} {}", if c.ok { "ok" } else { "!!" }, c.label, c.detail)?;
        }
        Ok(())
    }
}

pub fn self_check(np: &NamedPair) -> SelfCheck {
    let mut checks = Vec::new();
    let mut add = |label: String, ok: bool, detail: String| checks.push(Check { label, ok, detail });
    let x = np.pair.x();

    let verdict = decision::computable_type(&np.pair);
    add(
        "verdict".into(),
        verdict.overall == np.expected,
        format!("expected {:?}, got {:?}", np.expected, verdict.overall),
    );
    let audit = decision::audit(&verdict);
    add("certificates".into(), audit.is_ok(), audit.err().unwrap_or_default());

    for fact in &np.facts {
        match fact {
            Fact::Euler(chi) => {
                let got = x.euler_characteristic();
                add("euler characteristic".into(), got == *chi, format!("expected {chi}, got {got}"));
            }
            Fact::VertexCount(n) => {
                let got = x.vertices().count();
                add("vertex count".into(), got == *n, format!("expected {n}, got {got}"));
            }
            Fact::FreeBoundaryEmpty => {
                let b = x.boundary(BoundaryKind::One);
                add("no free faces".into(), b.is_empty(), format!("boundary has {} simplices", b.len()));
            }
            Fact::FreeBoundaryIsCycle => {
                let b = x.boundary(BoundaryKind::One);
                let ok = Graph::from_complex(&b).is_ok_and(|g| is_single_cycle(&g));
                add("free boundary is a circle".into(), ok, format!("f-vector {:?}", b.f_vector()));
            }
            Fact::AllLinksCycles => {
                let bad: Vec<VertexId> = x
                    .vertices()
                    .filter(|v| {
                        !x.link(*v)
                            .ok()
                            .and_then(|l| Graph::from_complex(&l).ok())
                            .is_some_and(|g| is_single_cycle(&g))
                    })
                    .collect();
                add("every link is a cycle".into(), bad.is_empty(), format!("offenders {bad:?}"));
            }
            Fact::TwoCyclesJoinedByArc { vertex, arc_edges } => {
                let shape = x
                    .link(*vertex)
                    .ok()
                    .and_then(|l| Graph::from_complex(&l).ok())
                    .and_then(|g| barbell_arc(&g));
                add(
                    format!("link of {vertex} is two cycles joined by an arc"),
                    shape == Some(*arc_edges),
                    format!("arc length {shape:?}, expected {arc_edges}"),
                );
            }
            Fact::LinkRanks(expected) => {
                let mut bad = Vec::new();
                for v in x.vertices() {
                    let g = x.link(v).ok().and_then(|l| Graph::from_complex(&l).ok());
                    let ok = g.is_some_and(|g| {
                        g.components().len() == 1
                            && g.bridges().is_empty()
                            && expected.get(&v) == Some(&g.cycle_rank())
                    });
                    if !ok {
                        bad.push(v);
                    }
                }
                let missing = expected.keys().filter(|v| !x.contains_vertex(**v)).count();
                add(
                    "link classes".into(),
                    bad.is_empty() && missing == 0,
                    format!("{} mismatched, {missing} missing", bad.len()),
                );
            }
            Fact::RankCount { rank, count } => {
                let got = x
                    .vertices()
                    .filter(|v| {
                        x.link(*v)
                            .ok()
                            .and_then(|l| Graph::from_complex(&l).ok())
                            .is_some_and(|g| g.cycle_rank() == *rank)
                    })
                    .count();
                add(
                    format!("vertices with rank-{rank} links"),
                    got == *count,
                    format!("expected {count}, got {got}"),
                );
            }
            Fact::FailingVertices(expected) => {
                let got: BTreeSet<VertexId> = verdict.failing().map(|l| l.vertex).collect();
                add("failing vertices".into(), &got == expected, format!("expected {expected:?}, got {got:?}"));
            }
        }
    }
    if let Ok(links) = link::extract_all(&np.pair) {
        let ok = links.len() == x.vertices().count();
        add("one local cone per vertex".into(), ok, String::new());
    }
    SelfCheck { name: np.name.clone(), checks }
}

pub fn is_single_cycle(g: &Graph) -> bool {
    g.node_count() >= 3 && g.nodes().all(|v| g.degree(v) == 2) && g.components().len() == 1
}

/// If `g` is two disjoint cycles joined by a path, the path's edge count.
pub fn barbell_arc(g: &Graph) -> Option<usize> {
    if g.components().len() != 1 {
        return None;
    }
    let arc = g.bridges();
    let mut rest = g.clone();
    for e in &arc {
        rest.remove_edge(*e);
    }
    let cyclic: Vec<BTreeSet<VertexId>> = rest
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    if cyclic.len() != 2 {
        return None;
    }
    for c in &cyclic {
        let sub = Graph::from_edges(
            c.iter().copied(),
            rest.edges().filter(|e: &Edge| c.contains(&e.lo())),
        );
        if !is_single_cycle(&sub) {
            return None;
        }
    }
    // the bridges must form one path between the two cycles
    let arc_graph = Graph::from_edges([], arc.iter().copied());
    let ends: Vec<VertexId> = arc_graph.nodes().filter(|v| arc_graph.degree(*v) == 1).collect();
    let path_like = arc_graph.components().len() == 1
        && ends.len() == 2
        && arc_graph.nodes().all(|v| arc_graph.degree(v) <= 2)
        && cyclic[0].contains(&ends[0]) != cyclic[0].contains(&ends[1])
        && ends.iter().all(|e| cyclic.iter().any(|c| c.contains(e)));
    path_like.then_some(arc.len())
}
