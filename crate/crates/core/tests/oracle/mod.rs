//! Brute-force reference implementations. Slow on purpose; every function
//! refuses graphs above `MAX_NODES`.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use conetype::{Edge, Graph, VertexId};

pub const MAX_NODES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooLarge(pub usize);

fn guard(g: &Graph) -> Result<(), TooLarge> {
    if g.node_count() > MAX_NODES {
        Err(TooLarge(g.node_count()))
    } else {
        Ok(())
    }
}

/// A simple path or simple cycle through a fixed edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Through {
    /// Vertex sequence of the path; the edge is one of its steps.
    Path(Vec<VertexId>),
    /// Vertex sequence of the cycle starting `hi, ..., lo`; closing step `lo - hi`
    /// is the edge.
    Cycle(Vec<VertexId>),
}

/// Every simple path and every simple cycle of `g` that uses `e`. Paths are
/// listed once each, oriented so that `e` is traversed from `lo` to `hi`.
pub fn all_simple_paths(g: &Graph, e: Edge) -> Result<Vec<Through>, TooLarge> {
    guard(g)?;
    let adj = adjacency(g);
    let (u, w) = (e.lo(), e.hi());
    let mut out = Vec::new();

    // left arm grows from u away from w, right arm from w
    let mut lefts = Vec::new();
    arms(&adj, vec![u], &BTreeSet::from([w]), &mut lefts);
    for left in &lefts {
        let used: BTreeSet<VertexId> = left.iter().copied().collect();
        let mut rights = Vec::new();
        arms(&adj, vec![w], &used, &mut rights);
        for right in rights {
            let mut p: Vec<VertexId> = left.iter().rev().copied().collect();
            p.extend(right);
            out.push(Through::Path(p));
        }
    }

    // cycles: paths from w back to u of at least two steps
    let mut stack = vec![(w, vec![w])];
    while let Some((at, path)) = stack.pop() {
        for &n in &adj[&at] {
            if n == u && path.len() >= 2 {
                let mut c = path.clone();
                c.push(u);
                out.push(Through::Cycle(c));
            } else if n != u && !path.contains(&n) {
                let mut next = path.clone();
                next.push(n);
                stack.push((n, next));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All simple walks starting with `prefix` that avoid `forbidden`.
fn arms(
    adj: &BTreeMap<VertexId, Vec<VertexId>>,
    prefix: Vec<VertexId>,
    forbidden: &BTreeSet<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let last = *prefix.last().expect("non-empty");
    for &n in &adj[&last] {
        if !forbidden.contains(&n) && !prefix.contains(&n) {
            let mut next = prefix.clone();
            next.push(n);
            arms(adj, next, forbidden, out);
        }
    }
    out.push(prefix);
}

fn adjacency(g: &Graph) -> BTreeMap<VertexId, Vec<VertexId>> {
    g.nodes().map(|v| (v, g.neighbors(v).collect())).collect()
}

/// The cone condition read literally: `e` lies on a cycle, or on a path
/// whose two ends are terminals.
pub fn edge_passes_oracle(g: &Graph, terminals: &BTreeSet<VertexId>, e: Edge) -> Result<bool, TooLarge> {
    Ok(all_simple_paths(g, e)?.iter().any(|t| match t {
        Through::Cycle(_) => true,
        Through::Path(p) => {
            terminals.contains(&p[0]) && terminals.contains(&p[p.len() - 1])
        }
    }))
}

/// Edges whose removal disconnects their endpoints.
pub fn bridge_oracle(g: &Graph) -> Result<BTreeSet<Edge>, TooLarge> {
    guard(g)?;
    Ok(g.edges().filter(|e| !connected_without(g, *e)).collect())
}

fn connected_without(g: &Graph, e: Edge) -> bool {
    let mut seen = BTreeSet::from([e.lo()]);
    let mut queue = VecDeque::from([e.lo()]);
    while let Some(v) = queue.pop_front() {
        for n in g.neighbors(v) {
            if Edge::new(v, n).is_ok_and(|f| f == e) {
                continue;
            }
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.contains(&e.hi())
}

/// Disjoint-paths form: `e = {u, w}` passes iff it lies on a cycle or there
/// are two vertex-disjoint paths in `g - e`, one from `u` and one from `w`,
/// ending at distinct terminals. Checked as a unit-vertex-capacity flow.
pub fn edge_passes_flow(g: &Graph, terminals: &BTreeSet<VertexId>, e: Edge) -> Result<bool, TooLarge> {
    guard(g)?;
    if connected_without(g, e) {
        return Ok(true);
    }
    let nodes: Vec<VertexId> = g.nodes().collect();
    let idx: BTreeMap<VertexId, usize> = nodes.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    // node v splits into in = 2i and out = 2i + 1
    let n = 2 * nodes.len() + 2;
    let (s, t) = (n - 2, n - 1);
    let mut cap = vec![vec![0i32; n]; n];
    for (i, _) in nodes.iter().enumerate() {
        cap[2 * i][2 * i + 1] = 1;
    }
    for f in g.edges() {
        if f == e {
            continue;
        }
        let (a, b) = (idx[&f.lo()], idx[&f.hi()]);
        cap[2 * a + 1][2 * b] = 1;
        cap[2 * b + 1][2 * a] = 1;
    }
    cap[s][2 * idx[&e.lo()]] = 1;
    cap[s][2 * idx[&e.hi()]] = 1;
    for v in terminals {
        cap[2 * idx[v] + 1][t] = 1;
    }
    Ok(max_flow(&mut cap, s, t) >= 2)
}

/// Edmonds-Karp on a dense capacity matrix.
fn max_flow(cap: &mut [Vec<i32>], s: usize, t: usize) -> i32 {
    let n = cap.len();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in 0..n {
                if prev[b] == usize::MAX && cap[a][b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut b = t;
        while b != s {
            let a = prev[b];
            cap[a][b] -= 1;
            cap[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
}

#[cfg(test)]
mod self_tests {
    use super::*;

    fn g(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(
            (0..n).map(VertexId),
            edges.iter().map(|(a, b)| Edge::new(VertexId(*a), VertexId(*b)).unwrap()),
        )
    }

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(VertexId(a), VertexId(b)).unwrap()
    }

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().copied().map(VertexId).collect()
    }

    #[test]
    fn triangle_has_one_cycle_through_each_edge() {
        let t = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let all = all_simple_paths(&t, e(0, 1)).unwrap();
        let cycles = all.iter().filter(|x| matches!(x, Through::Cycle(_))).count();
        assert_eq!(cycles, 1);
        // (0,1), (2,0,1), (0,1,2)
        assert_eq!(all.len() - cycles, 3);
    }

    #[test]
    fn path_enumeration() {
        // a=0, u=1, w=2, b=3
        let p = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let all = all_simple_paths(&p, e(1, 2)).unwrap();
        let expected = vec![
            Through::Path(ids(&[0, 1, 2])),
            Through::Path(ids(&[0, 1, 2, 3])),
            Through::Path(ids(&[1, 2])),
            Through::Path(ids(&[1, 2, 3])),
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn arc_between_cycles() {
        let bar = g(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]);
        let all = all_simple_paths(&bar, e(2, 3)).unwrap();
        assert!(all.iter().all(|x| matches!(x, Through::Path(_))));
        assert!(!edge_passes_oracle(&bar, &BTreeSet::new(), e(2, 3)).unwrap());
        let n = BTreeSet::from([VertexId(2), VertexId(4)]);
        assert!(edge_passes_oracle(&bar, &n, e(2, 3)).unwrap());
        assert!(edge_passes_flow(&bar, &n, e(2, 3)).unwrap());
        assert_eq!(bridge_oracle(&bar).unwrap(), BTreeSet::from([e(2, 3), e(3, 4)]));
    }

    #[test]
    fn empty_terminals_mean_cycle_membership() {
        let p = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        for f in p.edges() {
            let on_cycle = f != e(2, 3);
            assert_eq!(edge_passes_oracle(&p, &BTreeSet::new(), f).unwrap(), on_cycle);
            assert_eq!(edge_passes_flow(&p, &BTreeSet::new(), f).unwrap(), on_cycle);
        }
    }

    #[test]
    fn size_guard() {
        let big = g(13, &[(0, 1)]);
        assert_eq!(bridge_oracle(&big), Err(TooLarge(13)));
        assert!(all_simple_paths(&big, e(0, 1)).is_err());
    }
}
