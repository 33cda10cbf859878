//! Decomposition of `Λ ⊗ C` into real-irreducible isotypic pieces.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::characters::CharacterTable;
use super::group::MatrixGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsotypicError {
    #[error("character table is for a group of order {table}, representation has order {group}")]
    OrderMismatch { table: usize, group: usize },
    #[error("multiplicity of character {0} is not a non-negative integer")]
    BadMultiplicity(usize),
    #[error("isotypic dimensions sum to {got}, expected rank {rank}")]
    RankMismatch { got: usize, rank: usize },
}

/// Type of a real irreducible representation, read off the
/// Frobenius–Schur indicator of an underlying complex character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RealType {
    Real,
    Complex,
    Quaternionic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicClass {
    /// `chiI`, or `chiI+chiJ` for a conjugate pair.
    pub label: String,
    pub kind: RealType,
    /// Indices into the character table.
    pub characters: Vec<usize>,
    /// Degree of each underlying complex character.
    pub degree: usize,
    /// Multiplicity of each underlying complex character in `Λ ⊗ C`.
    pub multiplicity: usize,
    /// Complex dimension of the isotypic piece (summed over a conjugate pair).
    pub complex_dim: usize,
    pub even: bool,
    /// Whether the real isotypic piece carries an invariant complex structure:
    /// always for complex and quaternionic type, and for real type exactly
    /// when the multiplicity is even.
    pub splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicReport {
    pub rank: usize,
    /// Classes occurring in `Λ ⊗ C`, in character-table order.
    pub classes: Vec<IsotypicClass>,
}

impl IsotypicReport {
    /// Every piece has even complex dimension.
    pub fn all_even(&self) -> bool {
        self.classes.iter().all(|c| c.even)
    }

    /// Every piece admits an invariant complex structure.
    pub fn all_split(&self) -> bool {
        self.classes.iter().all(|c| c.splits)
    }
}

/// Multiplicity of every complex irreducible character in the natural
/// representation of `rho` on `Z^r ⊗ C`.
pub fn character_multiplicities(rho: &MatrixGroup, table: &CharacterTable) -> Result<Vec<usize>, IsotypicError> {
    if table.group_order() != rho.order() {
        return Err(IsotypicError::OrderMismatch { table: table.group_order(), group: rho.order() });
    }
    let traces: Vec<i64> = table.classes().iter().map(|c| rho.element(c.representative).trace()).collect();
    (0..table.len())
        .map(|chi| {
            table
                .integer_inner_product(chi, &traces)
                .and_then(|m| usize::try_from(m).ok())
                .ok_or(IsotypicError::BadMultiplicity(chi))
        })
        .collect()
}

pub fn real_isotypic_dimensions(rho: &MatrixGroup, table: &CharacterTable) -> Result<IsotypicReport, IsotypicError> {
    let mult = character_multiplicities(rho, table)?;
    let mut classes = Vec::new();
    for chi in 0..table.len() {
        let partner = table.conjugate(chi);
        if partner < chi || mult[chi] == 0 {
            continue;
        }
        let degree = table.degree(chi);
        let m = mult[chi];
        let (kind, characters, label, complex_dim, splits) = match table.fs_indicator(chi) {
            1 => (RealType::Real, vec![chi], format!("chi{chi}"), m * degree, m % 2 == 0),
            -1 => (RealType::Quaternionic, vec![chi], format!("chi{chi}"), m * degree, true),
            _ => (RealType::Complex, vec![chi, partner], format!("chi{chi}+chi{partner}"), 2 * m * degree, true),
        };
        classes.push(IsotypicClass {
            label,
            kind,
            characters,
            degree,
            multiplicity: m,
            complex_dim,
            even: complex_dim % 2 == 0,
            splits,
        });
    }
    let got: usize = classes.iter().map(|c| c.complex_dim).sum();
    if got != rho.rank() {
        return Err(IsotypicError::RankMismatch { got, rank: rho.rank() });
    }
    Ok(IsotypicReport { rank: rho.rank(), classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Matrix;
    use crate::groupcore::characters::character_table;
    use crate::groupcore::group::GroupMatrix;

    fn m(rows: &[&[i64]]) -> GroupMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn report(rank: usize, gens: &[GroupMatrix]) -> IsotypicReport {
        let g = MatrixGroup::generate(rank, gens, 512).unwrap();
        let t = character_table(&g).unwrap();
        real_isotypic_dimensions(&g, &t).unwrap()
    }

    #[test]
    fn minus_identity_is_one_even_class() {
        let r = report(2, &[m(&[&[-1, 0], &[0, -1]])]);
        assert_eq!(r.classes.len(), 1);
        assert_eq!((r.classes[0].complex_dim, r.classes[0].even, r.classes[0].multiplicity), (2, true, 2));
    }

    #[test]
    fn reflection_gives_two_odd_classes() {
        let r = report(2, &[m(&[&[1, 0], &[0, -1]])]);
        let dims: Vec<(usize, bool)> = r.classes.iter().map(|c| (c.complex_dim, c.even)).collect();
        assert_eq!(dims, vec![(1, false), (1, false)]);
    }

    #[test]
    fn rotation_pair_is_merged() {
        let r = report(2, &[m(&[&[0, -1], &[1, 0]])]);
        assert_eq!(r.classes.len(), 1);
        let c = &r.classes[0];
        assert_eq!((c.kind, c.complex_dim, c.even), (RealType::Complex, 2, true));
        assert_eq!(c.characters.len(), 2);
    }

    #[test]
    fn s3_standard_representation_is_even_but_does_not_split() {
        let r = report(2, &[m(&[&[0, -1], &[1, -1]]), m(&[&[0, 1], &[1, 0]])]);
        assert_eq!(r.classes.len(), 1);
        let c = &r.classes[0];
        assert_eq!((c.degree, c.multiplicity, c.complex_dim), (2, 1, 2));
        assert!(c.even && !c.splits);
    }
}
