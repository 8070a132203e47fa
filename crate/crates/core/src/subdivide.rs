//! Barycentric subdivision of simplicial pairs.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Complex, Pair, Simplex, VertexId};

/// The subdivided pair and, for each new vertex, the original simplex whose
/// barycenter it is. New vertex `i` is `origins[i]`; ids follow the sorted
/// order of the simplices of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub pair: Pair,
    pub origins: Vec<Simplex>,
}

impl Subdivision {
    /// Dash-joined original vertex list, e.g. `0-1-2`.
    pub fn name(&self, v: VertexId) -> Option<String> {
        self.origins.get(v.index()).map(|s| {
            s.vertices()
                .iter()
                .map(|u| u.to_string())
                .collect::<Vec<_>>()
                .join("-")
        })
    }

    /// Names built from caller-provided names of the original vertices.
    pub fn names_with(&self, label: impl Fn(VertexId) -> String) -> Vec<String> {
        self.origins
            .iter()
            .map(|s| {
                s.vertices()
                    .iter()
                    .map(|u| {
                        let l = label(*u);
                        if l.contains('-') {
                            format!("({l})")
                        } else {
                            l
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("-")
            })
            .collect()
    }
}

pub fn barycentric_subdivision(pair: &Pair) -> Subdivision {
    let origins: Vec<Simplex> = pair.x().simplices().cloned().collect();
    let ids: BTreeMap<&Simplex, VertexId> = origins
        .iter()
        .enumerate()
        .map(|(i, s)| (s, VertexId(i as u32)))
        .collect();
    let x = chain_complex(pair.x(), &ids);
    let a = chain_complex(pair.a(), &ids);
    let pair = Pair::new(x, a).expect("chains of A are chains of X");
    Subdivision { pair, origins }
}

/// Complex of chains `σ0 ⊊ σ1 ⊊ … ⊊ σk`, generated by the full flags of the
/// maximal simplices.
fn chain_complex(c: &Complex, ids: &BTreeMap<&Simplex, VertexId>) -> Complex {
    let mut gens = BTreeSet::new();
    for m in c.maximal_simplices() {
        let mut order: Vec<VertexId> = m.vertices().to_vec();
        for_each_permutation(&mut order, 0, &mut |perm| {
            let mut flag = Vec::with_capacity(perm.len());
            let mut prefix = Vec::with_capacity(perm.len());
            for v in perm {
                prefix.push(*v);
                let face = Simplex::new(prefix.iter().copied()).expect("distinct vertices");
                flag.push(ids[&face]);
            }
            gens.insert(Simplex::new(flag).expect("distinct chain members"));
        });
    }
    Complex::closure(gens).expect("flags are well formed")
}

fn for_each_permutation(items: &mut Vec<VertexId>, k: usize, f: &mut impl FnMut(&[VertexId])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}
