//! Finite semigroup analysis: Cayley tables, Green's relations, Rees matrix
//! presentations, group structure, projective-plane witnesses for inherent
//! nondualisability, a classifier built on those, and small-order census
//! tooling.

pub mod catalog;
pub mod census;
pub mod classify;
pub mod enumerate;
pub mod green;
pub mod group;
pub mod probe;
pub mod rees;
pub mod semigroup;
pub mod witness;

pub use catalog::{catalog, CatalogEntry, CatalogError};
pub use classify::{classify, verify_witness, Criterion, CriterionHit, Status, Verdict};
pub use group::FiniteGroup;
pub use rees::ReesPresentation;
pub use semigroup::{Element, FiniteSemigroup, SemigroupError};
