//! Finite abstract simplicial complexes and simplicial pairs.
//!
//! A [`Complex`] is a downward-closed set of [`Simplex`] values. Every
//! constructor either closes its input or checks closure, so a `Complex`
//! held by a caller is always a valid abstract simplicial complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest simplex (in vertices) accepted by [`Complex::closure`]; closing a
/// simplex enumerates all `2^k - 1` of its faces.
pub const MAX_SIMPLEX_VERTICES: usize = 24;

/// Opaque vertex label. Display names live in side tables owned by callers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    /// Reserved label that never occurs in parsed input (used for the apex of
    /// augmented graphs).
    pub const SENTINEL: VertexId = VertexId(u32::MAX);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("empty simplex")]
    EmptySimplex,
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Vec<u32>),
    #[error("simplex with {0} vertices exceeds the supported maximum of {MAX_SIMPLEX_VERTICES}")]
    SimplexTooLarge(usize),
    #[error("vertex {0} is reserved")]
    ReservedVertex(VertexId),
    #[error("vertex {0} is not a vertex of the complex")]
    UnknownVertex(VertexId),
    #[error("simplex {0} of A is not a simplex of X")]
    NotSubcomplex(Simplex),
    #[error("set of simplices is not downward closed: face {0} is missing")]
    NotClosed(Simplex),
    #[error("vertex map is not a bijection on the vertex set: {0}")]
    NotBijective(String),
}

/// A non-empty, strictly increasing list of vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from vertices in any order.
    pub fn new<I, V>(vertices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        if vs.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(vs.iter().map(|v| v.0).collect()));
        }
        if vs.contains(&VertexId::SENTINEL) {
            return Err(ComplexError::ReservedVertex(VertexId::SENTINEL));
        }
        Ok(Simplex(vs))
    }

    pub fn vertex(v: impl Into<VertexId>) -> Self {
        Simplex(vec![v.into()])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The simplex with `v` added; `None` if `v` is already present.
    pub fn with_vertex(&self, v: VertexId) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Some(Simplex(vs))
            }
        }
    }

    /// The simplex with `v` removed; `None` if that would leave it empty or `v`
    /// is absent.
    pub fn without_vertex(&self, v: VertexId) -> Option<Simplex> {
        let pos = self.0.binary_search(&v).ok()?;
        if self.0.len() == 1 {
            return None;
        }
        let mut vs = self.0.clone();
        vs.remove(pos);
        Some(Simplex(vs))
    }

    /// Codimension-one faces.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0..n).filter(move |_| n > 1).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect(),
            )
        })
    }

    /// All non-empty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n)).map(move |mask| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| *v)
                    .collect(),
            )
        })
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = ComplexError;

    fn try_from(vs: Vec<VertexId>) -> Result<Self, Self::Error> {
        Simplex::new(vs)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Which cofacet count selects a simplex into a boundary generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryKind {
    /// Exactly one simplex of the next dimension.
    One,
    /// At least one simplex of the next dimension.
    Plus,
    /// An odd number of simplices of the next dimension.
    Odd,
}

impl BoundaryKind {
    fn selects(self, cofacets: usize) -> bool {
        match self {
            BoundaryKind::One => cofacets == 1,
            BoundaryKind::Plus => cofacets >= 1,
            BoundaryKind::Odd => cofacets % 2 == 1,
        }
    }
}

/// A finite abstract simplicial complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Complex {
    simplices: BTreeSet<Simplex>,
}

impl Complex {
    pub fn empty() -> Self {
        Complex::default()
    }

    /// Smallest complex containing every given simplex.
    pub fn closure<I>(generators: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut gens: Vec<Simplex> = generators.into_iter().collect();
        if let Some(big) = gens.iter().find(|s| s.len() > MAX_SIMPLEX_VERTICES) {
            return Err(ComplexError::SimplexTooLarge(big.len()));
        }
        // Largest first: once a simplex is present, so are all of its faces.
        gens.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut simplices = BTreeSet::new();
        for g in gens {
            if simplices.contains(&g) {
                continue;
            }
            simplices.extend(g.faces());
        }
        Ok(Complex::from_closed(simplices))
    }

    /// Convenience for literal complexes in tests and generators.
    pub fn from_lists<S, V>(lists: S) -> Result<Self, ComplexError>
    where
        S: IntoIterator,
        S::Item: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let gens = lists
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>, _>>()?;
        Complex::closure(gens)
    }

    /// Accepts a set only if it is already downward closed.
    pub fn try_from_set(simplices: BTreeSet<Simplex>) -> Result<Self, ComplexError> {
        for s in &simplices {
            for f in s.facets() {
                if !simplices.contains(&f) {
                    return Err(ComplexError::NotClosed(f));
                }
            }
        }
        Ok(Complex { simplices })
    }

    pub(crate) fn from_closed(simplices: BTreeSet<Simplex>) -> Self {
        let c = Complex { simplices };
        debug_assert!(c.is_closed(), "constructor produced a non-closed set");
        c
    }

    fn is_closed(&self) -> bool {
        self.simplices
            .iter()
            .all(|s| s.facets().all(|f| self.simplices.contains(&f)))
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.simplices.iter()
    }

    pub fn simplex_set(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.simplices.contains(&Simplex::vertex(v))
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dim).max()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s.vertices()[0])
    }

    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Simplex> + '_ {
        self.simplices.iter().filter(move |s| s.dim() == d)
    }

    /// Number of simplices in each dimension, starting at 0.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.simplices {
            if f.len() <= s.dim() {
                f.resize(s.dim() + 1, 0);
            }
            f[s.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// For each simplex, the number of simplices of the next dimension
    /// containing it.
    pub fn cofacet_counts(&self) -> BTreeMap<&Simplex, usize> {
        let mut counts: BTreeMap<&Simplex, usize> =
            self.simplices.iter().map(|s| (s, 0)).collect();
        for t in &self.simplices {
            for f in t.facets() {
                if let Some(c) = counts.get_mut(&f) {
                    *c += 1;
                }
            }
        }
        counts
    }

    /// Simplices with no proper superset in the complex.
    pub fn maximal_simplices(&self) -> Vec<&Simplex> {
        self.cofacet_counts()
            .into_iter()
            .filter(|(_, c)| *c == 0)
            .map(|(s, _)| s)
            .collect()
    }

    pub fn is_maximal(&self, s: &Simplex) -> bool {
        self.contains(s)
            && !self
                .vertices()
                .any(|v| s.with_vertex(v).is_some_and(|t| self.contains(&t)))
    }

    /// Closure of the simplices that contain `v`.
    pub fn star(&self, v: VertexId) -> Result<Complex, ComplexError> {
        if !self.contains_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        let gens: Vec<Simplex> = self.simplices.iter().filter(|s| s.contains(v)).cloned().collect();
        Complex::closure(gens)
    }

    /// Simplices not containing `v` whose join with `v` is in the complex.
    pub fn link(&self, v: VertexId) -> Result<Complex, ComplexError> {
        if !self.contains_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        let set: BTreeSet<Simplex> = self
            .simplices
            .iter()
            .filter_map(|s| if s.contains(v) { s.without_vertex(v) } else { None })
            .collect();
        Ok(Complex::from_closed(set))
    }

    /// Simplices selected by `kind` from their cofacet counts, before closure.
    pub fn boundary_generators(&self, kind: BoundaryKind) -> BTreeSet<Simplex> {
        self.cofacet_counts()
            .into_iter()
            .filter(|(_, c)| kind.selects(*c))
            .map(|(s, _)| s.clone())
            .collect()
    }

    pub fn boundary(&self, kind: BoundaryKind) -> Complex {
        Complex::closure(self.boundary_generators(kind)).expect("faces of valid simplices")
    }

    /// Simplices with exactly one proper superset, counting supersets of every
    /// dimension.
    pub fn free_simplices(&self) -> BTreeSet<Simplex> {
        let mut supersets: BTreeMap<&Simplex, usize> =
            self.simplices.iter().map(|s| (s, 0)).collect();
        for t in &self.simplices {
            for f in t.faces() {
                if f.len() < t.len() {
                    if let Some(c) = supersets.get_mut(&f) {
                        *c += 1;
                    }
                }
            }
        }
        supersets
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// Vertices whose link is a single vertex.
    pub fn free_vertices(&self) -> BTreeSet<VertexId> {
        let mut link_sizes: BTreeMap<VertexId, usize> =
            self.vertices().map(|v| (v, 0)).collect();
        for s in &self.simplices {
            if s.len() >= 2 {
                for v in s.vertices() {
                    *link_sizes.get_mut(v).expect("closed complex") += 1;
                }
            }
        }
        link_sizes
            .into_iter()
            .filter(|(_, n)| *n == 1)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.simplices.is_subset(&other.simplices)
    }

    pub fn union(&self, other: &Complex) -> Complex {
        Complex::from_closed(self.simplices.union(&other.simplices).cloned().collect())
    }

    pub fn intersection(&self, other: &Complex) -> Complex {
        Complex::from_closed(self.simplices.intersection(&other.simplices).cloned().collect())
    }

    /// Image under a vertex bijection.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Complex, ComplexError> {
        let verts: BTreeSet<VertexId> = self.vertices().collect();
        if let Some(v) = verts.iter().find(|v| !map.contains_key(v)) {
            return Err(ComplexError::NotBijective(format!("vertex {v} is not mapped")));
        }
        let image: BTreeSet<VertexId> = verts.iter().map(|v| map[v]).collect();
        if image.len() != verts.len() {
            return Err(ComplexError::NotBijective("two vertices share an image".into()));
        }
        let set = self
            .simplices
            .iter()
            .map(|s| Simplex::new(s.vertices().iter().map(|v| map[v])))
            .collect::<Result<BTreeSet<_>, _>>()?;
        Ok(Complex::from_closed(set))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// A complex `X` together with a subcomplex `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair {
    x: Complex,
    a: Complex,
}

impl Pair {
    pub fn new(x: Complex, a: Complex) -> Result<Self, ComplexError> {
        if let Some(s) = a.simplices().find(|s| !x.contains(s)) {
            return Err(ComplexError::NotSubcomplex(s.clone()));
        }
        Ok(Pair { x, a })
    }

    /// Closes both generator sets, then checks `A ⊆ X`.
    pub fn from_generators<I, J>(x: I, a: J) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Simplex>,
        J: IntoIterator<Item = Simplex>,
    {
        Pair::new(Complex::closure(x)?, Complex::closure(a)?)
    }

    pub fn from_lists<S, T, V, W>(x: S, a: T) -> Result<Self, ComplexError>
    where
        S: IntoIterator,
        S::Item: IntoIterator<Item = V>,
        V: Into<VertexId>,
        T: IntoIterator,
        T::Item: IntoIterator<Item = W>,
        W: Into<VertexId>,
    {
        Pair::new(Complex::from_lists(x)?, Complex::from_lists(a)?)
    }

    pub fn x(&self) -> &Complex {
        &self.x
    }

    pub fn a(&self) -> &Complex {
        &self.a
    }

    pub fn into_parts(self) -> (Complex, Complex) {
        (self.x, self.a)
    }

    /// True iff `A` contains no maximal simplex of `X`, which is when `A`
    /// has empty interior in the realization of `X`.
    pub fn has_empty_interior(&self) -> bool {
        self.interior_witness().is_none()
    }

    /// A maximal simplex of `X` lying in `A`, if there is one.
    pub fn interior_witness(&self) -> Option<&Simplex> {
        self.x.maximal_simplices().into_iter().find(|m| self.a.contains(m))
    }

    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Pair, ComplexError> {
        Pair::new(self.x.relabel(map)?, self.a.relabel(map)?)
    }
}
