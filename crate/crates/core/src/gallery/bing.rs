//! Bing's house built from unit squares on the integer lattice, each square
//! coned to a new center vertex.
//!
//! The box is `[0,5] × [0,3] × [0,2]` with a floor at `z = 1`. The upper
//! room is entered from below through a tube over `[1,2] × [1,2]` that
//! crosses the lower room; the lower room is entered from above through a
//! tube over `[3,4] × [1,2]` that crosses the upper room. Each tube is tied
//! to the front wall `y = 0` by an internal wall.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Complex, Pair, VertexId};
use crate::graph::{Edge, Graph};

type Point = [i32; 3];

/// Axis-aligned unit square: normal axis and its lower corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Square {
    normal: usize,
    corner: Point,
}

impl Square {
    /// Corners in cyclic order.
    fn corners(self) -> [Point; 4] {
        let (a, b) = match self.normal {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let p = self.corner;
        let mut q = [p; 4];
        q[1][a] += 1;
        q[2][a] += 1;
        q[2][b] += 1;
        q[3][b] += 1;
        q
    }
}

const W: i32 = 5;
const D: i32 = 3;
const UP_TUBE: (i32, i32) = (1, 1);
const DOWN_TUBE: (i32, i32) = (3, 1);

fn squares() -> Vec<Square> {
    let mut out = Vec::new();
    let mut push = |normal: usize, corner: Point| out.push(Square { normal, corner });
    for i in 0..W {
        for j in 0..D {
            if (i, j) != UP_TUBE {
                push(2, [i, j, 0]);
            }
            if (i, j) != DOWN_TUBE {
                push(2, [i, j, 2]);
            }
            if (i, j) != UP_TUBE && (i, j) != DOWN_TUBE {
                push(2, [i, j, 1]);
            }
        }
    }
    for k in 0..2 {
        for i in 0..W {
            push(1, [i, 0, k]);
            push(1, [i, D, k]);
        }
        for j in 0..D {
            push(0, [0, j, k]);
            push(0, [W, j, k]);
        }
    }
    // tubes: walls of the unit column over (x, y), spanning one storey
    for ((x, y), k) in [(UP_TUBE, 0), (DOWN_TUBE, 1)] {
        push(0, [x, y, k]);
        push(0, [x + 1, y, k]);
        push(1, [x, y, k]);
        push(1, [x, y + 1, k]);
    }
    // internal walls from a tube edge to the front wall
    push(0, [UP_TUBE.0, 0, 0]);
    push(0, [DOWN_TUBE.0 + 1, 0, 1]);
    out.sort();
    out
}

pub struct BingHouse {
    pub pair: Pair,
    pub labels: Vec<String>,
    /// Cycle rank of every vertex link, read off the cubical structure.
    pub expected_ranks: BTreeMap<VertexId, usize>,
}

pub fn build() -> BingHouse {
    let squares = squares();
    let mut points: BTreeSet<Point> = BTreeSet::new();
    for s in &squares {
        points.extend(s.corners());
    }
    let ids: BTreeMap<Point, VertexId> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, VertexId(i as u32)))
        .collect();
    let mut labels: Vec<String> = points
        .iter()
        .map(|p| format!("({},{},{})", p[0], p[1], p[2]))
        .collect();

    let mut tris = Vec::with_capacity(4 * squares.len());
    let mut expected_ranks = BTreeMap::new();
    for (k, s) in squares.iter().enumerate() {
        let center = VertexId((points.len() + k) as u32);
        let c = s.corners();
        labels.push(format!("c{}({},{},{})", "xyz".as_bytes()[s.normal] as char, c[0][0], c[0][1], c[0][2]));
        for i in 0..4 {
            tris.push([center, ids[&c[i]], ids[&c[(i + 1) % 4]]]);
        }
        expected_ranks.insert(center, 1);
    }
    let complex = Complex::from_lists(tris).expect("distinct vertices");
    for (p, id) in &ids {
        expected_ranks.insert(*id, cubical_link(&squares, *p).cycle_rank());
    }
    BingHouse {
        pair: Pair::new(complex, Complex::empty()).expect("empty A"),
        labels,
        expected_ranks,
    }
}

/// Link of a lattice point in the square complex: one node per incident
/// lattice edge (named by direction), one edge per incident square.
fn cubical_link(squares: &[Square], p: Point) -> Graph {
    let dir = |from: Point, to: Point| -> VertexId {
        let d: Vec<i32> = (0..3).map(|i| to[i] - from[i]).collect();
        let axis = d.iter().position(|x| *x != 0).expect("distinct corners");
        VertexId((2 * axis + usize::from(d[axis] > 0)) as u32)
    };
    let mut g = Graph::new();
    for s in squares {
        let c = s.corners();
        if let Some(i) = c.iter().position(|q| *q == p) {
            let a = dir(p, c[(i + 1) % 4]);
            let b = dir(p, c[(i + 3) % 4]);
            g.add_edge(Edge::new(a, b).expect("perpendicular sides"));
        }
    }
    g
}
