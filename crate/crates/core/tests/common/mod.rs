//! Seeded random instances shared by the integration tests.

#![allow(dead_code)]

pub mod mutation;

use std::collections::BTreeSet;

use conetype::{Complex, Edge, Graph, MarkedLink, Pair, Simplex, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn v(i: u32) -> VertexId {
    VertexId(i)
}

pub fn edge(a: u32, b: u32) -> Edge {
    Edge::new(VertexId(a), VertexId(b)).expect("distinct endpoints")
}

/// All unordered pairs of `0..n` in a fixed order.
pub fn pairs(n: u32) -> Vec<Edge> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| edge(a, b))).collect()
}

/// The graph on `0..n` whose edges are the bits of `mask` over `pairs(n)`.
pub fn graph_from_mask(n: u32, mask: u64) -> Graph {
    let all = pairs(n);
    let edges = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
    Graph::from_edges((0..n).map(VertexId), edges)
}

pub fn subset<T: Copy + Ord>(items: &[T], mask: u64) -> BTreeSet<T> {
    items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| *x).collect()
}

/// Erdős-Rényi graph on `0..n`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let edges: Vec<Edge> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges((0..n).map(VertexId), edges)
}

/// Random spanning tree plus each further pair with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let mut order: Vec<u32> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new();
    g.add_node(VertexId(order[0]));
    for i in 1..order.len() {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(edge(order[i], parent));
    }
    for e in pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(e);
        }
    }
    g
}

pub fn random_terminals(rng: &mut ChaCha8Rng, g: &Graph, p: f64) -> BTreeSet<VertexId> {
    g.nodes().filter(|_| rng.gen_bool(p)).collect()
}

pub fn random_marked_link(rng: &mut ChaCha8Rng, max_nodes: u32) -> MarkedLink {
    let n = rng.gen_range(1..=max_nodes);
    let p = rng.gen_range(0.1..0.7);
    let g = random_graph(rng, n, p);
    let p = rng.gen_range(0.0..0.6);
    let terminals = random_terminals(rng, &g, p);
    let tip = !terminals.is_empty() || rng.gen_bool(0.5);
    MarkedLink::new(VertexId(n), g, terminals, tip).expect("terminals are nodes")
}

fn random_simplex(rng: &mut ChaCha8Rng, n: u32, size: usize) -> Simplex {
    let mut vs: Vec<u32> = (0..n).collect();
    vs.shuffle(rng);
    Simplex::new(vs[..size].iter().copied().map(VertexId)).expect("distinct")
}

/// Complex of dimension at most `max_dim` on at most `n` vertices.
pub fn random_complex(rng: &mut ChaCha8Rng, n: u32, generators: usize, max_dim: usize) -> Complex {
    let gens: Vec<Simplex> = (0..generators)
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n as usize));
            random_simplex(rng, n, size)
        })
        .collect();
    Complex::closure(gens).expect("valid simplices")
}

/// Two-dimensional complex: random triangles plus a few loose edges.
pub fn random_2complex(rng: &mut ChaCha8Rng) -> Complex {
    let n = rng.gen_range(4..=12);
    let tris = rng.gen_range(1..=2 * n as usize);
    let mut gens: Vec<Simplex> = (0..tris).map(|_| random_simplex(rng, n, 3)).collect();
    for _ in 0..rng.gen_range(0..=3) {
        gens.push(random_simplex(rng, n, 2));
    }
    Complex::closure(gens).expect("valid simplices")
}

/// `A` made of random non-maximal simplices, so the pair has empty interior.
pub fn random_interior_free_subcomplex(rng: &mut ChaCha8Rng, x: &Complex, p: f64) -> Complex {
    let gens: Vec<Simplex> = x
        .simplices()
        .filter(|s| !x.is_maximal(s) && rng.gen_bool(p))
        .cloned()
        .collect();
    Complex::closure(gens).expect("subsets of valid simplices")
}

/// An applicable pair of dimension at most two.
pub fn random_applicable_pair(rng: &mut ChaCha8Rng) -> Pair {
    let x = random_2complex(rng);
    let p = rng.gen_range(0.0..0.8);
    let a = random_interior_free_subcomplex(rng, &x, p);
    Pair::new(x, a).expect("A built from faces of X")
}
