//! Computing in graph products of finitely-generated abelian groups.
//!
//! A labeled graph assigns a finitely-generated abelian group to each
//! vertex of a finite simplicial graph; the graph product is the free
//! product of the vertex groups with commutation imposed across edges.
//! This crate works with such presentations:
//!
//! - [`abelian`]: label arithmetic — primary decomposition, invariant
//!   factors, direct indecomposability;
//! - [`graph`]: labeled graphs — cliques, stars, the T0 machinery and
//!   labeled-graph isomorphism with canonical labeling;
//! - [`word`]: the element calculus — reduced words, canonical normal
//!   forms, supports, cyclic reduction, centralizers, element orders and
//!   the retraction onto the infinite-order part;
//! - [`canonical`]: refinement of labels into directly-indecomposable
//!   cyclic factors, the two canonical decompositions, and the decision
//!   procedure for isomorphism of two graph-product presentations;
//! - [`oracle`]: brute-force ground truth by breadth-first enumeration of
//!   group elements, used heavily by the test suite.

pub mod abelian;
pub mod canonical;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod word;

pub use abelian::{AbelianLabel, CyclicFactor};
pub use canonical::{
    canonical_indecomposable, canonical_t0_abelian, groups_isomorphic, refine, DecompositionKind,
};
pub use error::{Error, Result};
pub use graph::{canonical_form, labeled_iso, IsoWitness, LabeledGraph, VertexPartition};
pub use oracle::Ball;
pub use word::{ElementOrder, Syllable, Word};
