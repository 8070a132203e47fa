//! Decide whether a finite simplicial pair `(X, A)` has computable type by
//! inspecting the cone at every vertex, with certificates that can be
//! checked independently of the decision.
//!
//! ```
//! use conetype::{computable_type, Overall, Pair};
//!
//! let pair = Pair::from_lists([[0, 1, 2]], [[0, 1], [1, 2], [0, 2]]).unwrap();
//! assert_eq!(computable_type(&pair).overall, Overall::ComputableType);
//! ```

pub mod certificate;
pub mod cli;
pub mod complex;
pub mod decision;
pub mod gallery;
pub mod graph;
pub mod io;
pub mod link;
pub mod subdivide;

pub use certificate::{check_certificate, Certificate, NegativeCertificate, PositiveCertificate};
pub use complex::{BoundaryKind, Complex, ComplexError, Pair, Simplex, VertexId};
pub use decision::{computable_type, Overall, Verdict};
pub use graph::{Edge, Graph};
pub use link::{extract_marked_link, MarkedLink};
pub use subdivide::barycentric_subdivision;
