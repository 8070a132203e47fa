//! Dunce hat: a triangle whose three sides are glued with word `x x x⁻¹`.
//!
//! Each side of the model triangle is cut into three segments, so the glued
//! boundary is the circle `v - p1 - p2 - v`. A collar of nine inner vertices
//! keeps every interior edge away from two boundary points with the same
//! image, and a central vertex cones off the inner ring.

use crate::complex::{Complex, Pair, VertexId};

pub const CORNER: VertexId = VertexId(0);
const P1: u32 = 1;
const P2: u32 = 2;
const RING: u32 = 3;
const CENTER: u32 = 12;

/// Images of the model boundary vertices, walking A → B → C → A.
/// Sides AB and BC read `v p1 p2 v`; side CA reads `v p2 p1 v`.
const BOUNDARY: [u32; 9] = [0, P1, P2, 0, P1, P2, 0, P2, P1];

pub fn complex() -> Complex {
    let n = BOUNDARY.len();
    let q = |i: usize| RING + (i % n) as u32;
    let b = |i: usize| BOUNDARY[i % n];
    let mut tris = Vec::with_capacity(3 * n);
    for i in 0..n {
        tris.push([b(i), b(i + 1), q(i)]);
        tris.push([b(i + 1), q(i), q(i + 1)]);
        tris.push([CENTER, q(i), q(i + 1)]);
    }
    Complex::from_lists(tris).expect("distinct vertices in every triangle")
}

/// The glued side, a 3-cycle through the corner.
pub fn identified_edge() -> Complex {
    Complex::from_lists([[0, P1], [P1, P2], [P2, 0]]).expect("valid edges")
}

pub fn pair(with_edge: bool) -> Pair {
    let a = if with_edge { identified_edge() } else { Complex::empty() };
    Pair::new(complex(), a).expect("identified edge lies in the hat")
}

pub fn labels() -> Vec<String> {
    let mut l = vec!["v".to_string(), "p1".into(), "p2".into()];
    l.extend((0..9).map(|i| format!("q{i}")));
    l.push("z".into());
    l
}

/// Terminals of the corner link when `A` is the glued edge.
#[cfg(test)]
pub fn arc_endpoints() -> [VertexId; 2] {
    [VertexId(P1), VertexId(P2)]
}
