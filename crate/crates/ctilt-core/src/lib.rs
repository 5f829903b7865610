//! Exact computations for cluster-tilted algebras of Dynkin type: quivers and
//! their mutation classes, relations read off the quiver, path-algebra bases
//! and Cartan matrices, Cartan invariants, and two-term tilting complexes
//! attached to a vertex together with the good-mutation test.
//!
//! Vertices are 0-based throughout the API; every text format (arrow tuples,
//! cycle notation, paths, JSON) is 1-based.

pub mod classify;
pub mod error;
pub mod fixtures;
pub mod invariants;
pub mod linalg;
pub mod mutation_class;
pub mod path_algebra;
pub mod quiver;
pub mod relations;
pub mod tilting;

pub use error::{Error, Result};
pub use quiver::{CanonicalKey, Permutation, Quiver};
