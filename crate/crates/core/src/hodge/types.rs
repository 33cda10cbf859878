//! Hodge types of `G`-invariant complex structures and the dimensions of
//! the corresponding components of the fixed locus in Teichmüller space.
//!
//! An invariant `V ⊂ Λ ⊗ C` with `V ⊕ V̄ = Λ ⊗ C` contains each complex
//! irreducible `χ` with some multiplicity `d_χ`, and `V̄` then contains `χ`
//! with multiplicity `m_χ - d_χ`. Hence `d_χ + d_χ̄ = m_χ`: for a
//! conjugate pair any split is possible, while a self-conjugate `χ` forces
//! `d_χ = m_χ / 2`. The component through `V` is open in a product of
//! Grassmannians, with tangent space `Hom_G(V, V̄)` of dimension
//! `Σ_χ d_χ (m_χ - d_χ)` over all complex irreducibles.

use serde::{Deserialize, Serialize};

use super::evenness::evenness_with_table;
use super::HodgeError;
use crate::crystal::CrystGroup;
use crate::groupcore::{character_table, CharacterTable, RealType};

/// Split of one real isotypic class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassSplit {
    pub label: String,
    pub kind: RealType,
    /// Character indices: `[χ]`, or `[χ, χ̄]` for a conjugate pair.
    pub characters: Vec<usize>,
    pub degree: usize,
    /// Multiplicity `m_χ` of each character in `Λ ⊗ C`.
    pub multiplicity: usize,
    /// Multiplicity of each listed character in `V`.
    pub split: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HodgeType {
    pub classes: Vec<ClassSplit>,
}

impl HodgeType {
    /// `dim_C V`, which equals `n`.
    pub fn dimension(&self) -> usize {
        self.classes.iter().map(|c| c.split.iter().sum::<usize>() * c.degree).sum()
    }

    /// `d_χ` for every character of the table, zero for absent ones.
    pub fn character_multiplicities(&self, characters: usize) -> Vec<usize> {
        let mut d = vec![0; characters];
        for c in &self.classes {
            for (&chi, &dc) in c.characters.iter().zip(&c.split) {
                d[chi] = dc;
            }
        }
        d
    }
}

/// All Hodge types, with the table they were computed from.
pub fn hodge_types_with_table(group: &CrystGroup, table: &CharacterTable) -> Result<Vec<HodgeType>, HodgeError> {
    let report = evenness_with_table(group, table)?;
    if !report.even {
        return Err(HodgeError::NotEven(report.witnesses));
    }
    let mut choices: Vec<Vec<ClassSplit>> = Vec::new();
    for c in &report.isotypic.classes {
        let base = ClassSplit {
            label: c.label.clone(),
            kind: c.kind,
            characters: c.characters.clone(),
            degree: c.degree,
            multiplicity: c.multiplicity,
            split: Vec::new(),
        };
        let m = c.multiplicity;
        let options = match c.kind {
            RealType::Complex => (0..=m).map(|d| vec![d, m - d]).collect(),
            RealType::Real | RealType::Quaternionic => vec![vec![m / 2]],
        };
        choices.push(options.into_iter().map(|split| ClassSplit { split, ..base.clone() }).collect());
    }
    let mut types = vec![HodgeType { classes: Vec::new() }];
    for options in choices {
        types = types
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |o| {
                    let mut classes = t.classes.clone();
                    classes.push(o.clone());
                    HodgeType { classes }
                })
            })
            .collect();
    }
    Ok(types)
}

/// Enumerates the admissible Hodge types of an even group.
pub fn hodge_types(group: &CrystGroup) -> Result<Vec<HodgeType>, HodgeError> {
    let table = character_table(group.linear())?;
    hodge_types_with_table(group, &table)
}

/// `dim_C Hom_G(V, V̄) = Σ_χ d_χ (m_χ - d_χ)` over all complex irreducibles.
pub fn component_dimension(t: &HodgeType) -> usize {
    t.classes.iter().map(|c| c.split.iter().map(|&d| d * (c.multiplicity - d)).sum::<usize>()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{verify_crystallographic, AffineMap, CrystData};
    use crate::exactla::rational::rat;
    use crate::exactla::Matrix;
    use crate::groupcore::GroupMatrix;

    fn cryst(rank: usize, gens: Vec<GroupMatrix>) -> CrystGroup {
        let gens = gens.into_iter().map(|l| AffineMap::new(l, vec![rat(0); rank])).collect();
        verify_crystallographic(&CrystData::new(rank, gens), 512).unwrap()
    }

    #[test]
    fn trivial_group_has_one_type_of_full_dimension() {
        for n in 1..=3 {
            let t = hodge_types(&cryst(2 * n, vec![])).unwrap();
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].dimension(), n);
            assert_eq!(component_dimension(&t[0]), n * n);
        }
    }

    #[test]
    fn rotation_has_two_rigid_types() {
        let t = hodge_types(&cryst(2, vec![Matrix::from_rows(vec![vec![0, -1], vec![1, 0]])])).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|h| component_dimension(h) == 0 && h.dimension() == 1));
    }

    #[test]
    fn minus_identity_rank_four() {
        let t = hodge_types(&cryst(4, vec![GroupMatrix::identity(4).scale(&-1)])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(component_dimension(&t[0]), 4);
    }

    #[test]
    fn odd_group_has_no_types() {
        let r = hodge_types(&cryst(2, vec![Matrix::from_rows(vec![vec![1, 0], vec![0, -1]])]));
        assert!(matches!(r, Err(HodgeError::NotEven(_))));
    }
}
