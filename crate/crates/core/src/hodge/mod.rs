//! Invariant complex structures, period matrices, Hodge types and the
//! dimensions of fixed-locus components in Teichmüller space.

pub mod evenness;
pub mod numeric;
pub mod omega;
pub mod structure;
pub mod types;

use thiserror::Error;

use crate::groupcore::{CharacterError, IsotypicError};

pub use evenness::{evenness_with_table, is_even, EvennessReport};
pub use omega::{
    is_invariant, omega_in_t, orientation_value, right_action, same_span, torus_from_omega, Gaussian, OmegaMatrix,
    TorusModel,
};
pub use structure::{
    approximate_structure, default_tolerance, invariant_complex_structure, invariant_skew_forms, search_exact,
    standard_structure, ComplexStructure, StructureMode, StructureOptions, StructureOutcome,
};
pub use types::{component_dimension, hodge_types, hodge_types_with_table, ClassSplit, HodgeType};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HodgeError {
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Isotypic(#[from] IsotypicError),
    #[error("group is not even; obstructing classes: {0:?}")]
    NotEven(Vec<String>),
    #[error("period matrix is degenerate: V and its conjugate intersect")]
    DegenerateOmega,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("approximate complex structure did not reach the tolerance (best residual {residual:e})")]
    NumericalFailure { residual: f64 },
}
