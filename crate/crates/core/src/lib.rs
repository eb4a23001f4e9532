//! Exact-arithmetic toolkit for Hom-F-manifold algebras and their
//! relatives: structure-constant models, exhaustive axiom checkers,
//! representations, O-operators, a cochain complex and formal deformations.

pub mod algebra;
pub mod cohomology;
pub mod constructions;
pub mod deformations;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod representations;

pub use error::{Error, Result};
pub use report::{CheckReport, Witness};
