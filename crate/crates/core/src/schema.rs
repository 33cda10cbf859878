//! JSON input documents.
//!
//! Rationals are strings `"p/q"` and complex numbers `["re", "im"]` pairs of
//! rational strings, so inputs are exact. Unknown fields are rejected.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{AffineMap, CrystData};
use crate::exactla::serde_exact;
use crate::exactla::Matrix;
use crate::hodge::{Gaussian, OmegaMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("generator {index}: linear part must be {rank}x{rank}")]
    LinearShape { index: usize, rank: usize },
    #[error("generator {index}: translation must have {rank} entries, found {found}")]
    TranslationLength { index: usize, rank: usize, found: usize },
    #[error("omega must be a {rows}x{cols} matrix")]
    OmegaShape { rows: usize, cols: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorInput {
    pub linear: Vec<Vec<i64>>,
    /// Defaults to the zero vector.
    #[serde(default, with = "serde_exact::rational_vec")]
    pub translation: Vec<BigRational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

/// A crystallographic group given by affine generators on `R^rank`, with an
/// optional period matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub rank: usize,
    pub generators: Vec<GeneratorInput>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "optional_gaussian_rows")]
    pub omega: Option<Vec<Vec<Gaussian>>>,
    #[serde(default)]
    pub options: InputOptions,
}

mod optional_gaussian_rows {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactla::serde_exact::gaussian_rows;
    use crate::hodge::Gaussian;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Vec<Gaussian>>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(rows) => gaussian_rows::serialize(rows, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<Gaussian>>>, D::Error> {
        #[derive(Deserialize)]
        struct Wrapped(#[serde(with = "gaussian_rows")] Vec<Vec<Gaussian>>);
        Ok(Some(Wrapped::deserialize(d)?.0))
    }
}

impl GroupInput {
    /// Checks shapes and builds the generator data.
    pub fn crystal_data(&self) -> Result<CrystData, SchemaError> {
        let r = self.rank;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (index, g) in self.generators.iter().enumerate() {
            if g.linear.len() != r || g.linear.iter().any(|row| row.len() != r) {
                return Err(SchemaError::LinearShape { index, rank: r });
            }
            let translation = if g.translation.is_empty() {
                vec![BigRational::from_integer(0.into()); r]
            } else if g.translation.len() == r {
                g.translation.clone()
            } else {
                return Err(SchemaError::TranslationLength { index, rank: r, found: g.translation.len() });
            };
            gens.push(AffineMap::new(Matrix::from_rows(g.linear.clone()), translation));
        }
        Ok(CrystData::new(r, gens))
    }

    /// The period matrix, when one was given.
    pub fn omega_matrix(&self) -> Option<Result<OmegaMatrix, SchemaError>> {
        let rows = self.omega.as_ref()?;
        let (r, n) = (self.rank, self.rank / 2);
        if r % 2 != 0 || rows.len() != r || rows.iter().any(|row| row.len() != n) {
            return Some(Err(SchemaError::OmegaShape { rows: r, cols: n }));
        }
        Some(OmegaMatrix::new(Matrix::from_rows(rows.clone())).map_err(|_| SchemaError::OmegaShape { rows: r, cols: n }))
    }
}

/// Input of the Platonic-triple check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlatonicInput {
    pub triple: [u32; 3],
    /// Coset bound for the enumeration cross-check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}
