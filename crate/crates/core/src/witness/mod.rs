//! Projective-plane witnesses: the product template, line generators, the
//! generated subalgebra of a power of the host, and the ghost element.

mod closure;
mod plane;
mod template;

pub use closure::{
    closure, closure_with, ghost, ghost_membership, ind_bookkeeping_check, line_generators,
    line_identity_holds, line_tuple, ClosureReport, ClosureResult, CoordinateCheck, GhostMembership,
    IndReport, PowerTuple, DEFAULT_BUDGET,
};
pub use plane::{build_plane, Meet, ProjectivePlane, MAX_ORDER};
pub use template::{
    derive_template_nilpotent, find_template_commutator, find_template_raw, TemplateMode, TemplateT,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("plane order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("plane axiom violated: {0}")]
    AxiomViolated(&'static str),
    #[error("join of a point with itself")]
    SamePoint,
    #[error("template degenerates: e = f = {0}")]
    TemplateDegenerate(usize),
    #[error("template check failed: {0}")]
    TemplateCheck(String),
    #[error("closure exceeded the budget of {budget} members")]
    ClosureBudgetExceeded { budget: usize },
    #[error("host has {0} elements; tuples are packed one byte per coordinate")]
    HostTooLarge(usize),
    #[error("no generators")]
    NoGenerators,
    #[error("{points} points do not exceed the block threshold {threshold}")]
    PlaneTooSmall { points: usize, threshold: usize },
    #[error("A0 tuple for point {0} is not in the closure")]
    MissingFromClosure(usize),
}
