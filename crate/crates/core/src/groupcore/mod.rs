//! Finite subgroups of `GL(r, Z)`: closure from generators, conjugacy
//! classes, exact character tables and isotypic decompositions.

pub mod characters;
pub mod cyclotomic;
pub mod group;
pub mod isotypic;
pub mod modp;

pub use characters::{character_table, fs_indicator, CharacterError, CharacterTable};
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use group::{class_lookup, conjugacy_classes, ConjugacyClass, GroupError, GroupMatrix, MatrixGroup, DEFAULT_ORDER_BOUND};
pub use isotypic::{character_multiplicities, real_isotypic_dimensions, IsotypicClass, IsotypicError, IsotypicReport, RealType};

/// Closure of `generators` in `GL(rank, Z)`, stopping after `bound` elements.
pub fn closure(rank: usize, generators: &[GroupMatrix], bound: usize) -> Result<MatrixGroup, GroupError> {
    MatrixGroup::generate(rank, generators, bound)
}
