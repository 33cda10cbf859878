//! Evenness: existence of a `G`-invariant complex structure on `Λ ⊗ R`.

use serde::{Deserialize, Serialize};

use super::HodgeError;
use crate::crystal::CrystGroup;
use crate::groupcore::{character_table, real_isotypic_dimensions, CharacterTable, IsotypicReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvennessReport {
    pub rank: usize,
    pub even: bool,
    pub even_rank: bool,
    pub isotypic: IsotypicReport,
    /// Labels of the classes that obstruct an invariant complex structure.
    pub witnesses: Vec<String>,
}

/// Decides evenness with a precomputed character table of the linear part.
pub fn evenness_with_table(group: &CrystGroup, table: &CharacterTable) -> Result<EvennessReport, HodgeError> {
    let isotypic = real_isotypic_dimensions(group.linear(), table)?;
    let even_rank = group.rank().is_multiple_of(2);
    let witnesses: Vec<String> = isotypic.classes.iter().filter(|c| !c.splits).map(|c| c.label.clone()).collect();
    Ok(EvennessReport { rank: group.rank(), even: even_rank && witnesses.is_empty(), even_rank, isotypic, witnesses })
}

/// `Γ` is even when the rank is even and every real isotypic piece of
/// `Λ ⊗ R` admits an invariant complex structure.
///
/// For a class of real type with multiplicity `m` the piece is `m` copies
/// of an absolutely irreducible real representation, whose commutant is
/// `M_m(R)`; it carries a complex structure iff `m` is even. Pieces of
/// complex or quaternionic type always do. When `G` is abelian this is the
/// same as asking every piece to have even complex dimension.
pub fn is_even(group: &CrystGroup) -> Result<EvennessReport, HodgeError> {
    let table = character_table(group.linear())?;
    evenness_with_table(group, &table)
}
