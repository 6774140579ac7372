//! Exact coadjoint-orbit computations for nilpotent Lie algebras: jump
//! indices, coarse stratifications, index and rank invariants of the group
//! C*-algebra, and the topology of the Heisenberg dual.

pub mod catalog;
pub mod heisenberg_dual;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod stratification;

pub use catalog::{CatalogEntry, CatalogError};
pub use heisenberg_dual::{DualError, DualSpace, DualSubset, QcDecision, QcReason};
pub use invariants::{compute_bundle, BundleOptions, InvariantBundle, InvariantError, NuclearMode};
pub use lie::{Functional, LieError, NilpotentAlgebra, ValidationReport, Violation};
pub use linalg::{Matrix, Subspace};
pub use rational::Rational;
pub use stratification::{jump_set, stratify, IndexSet, StratError, StratificationReport};
