//! Crystallographic groups: validation, lattice normalization, extension
//! cocycles and their affine realizations, and torsion-freeness.

pub mod group;
pub mod realization;

pub use group::{
    covolume, normalize_action, verify_crystallographic, AffineMap, CrystData, CrystGroup, CrystalError, NormalizedAction,
};
pub use realization::{
    affine_realization, is_torsion_free, realizations_equivalent, realizes, torsion_elements, ExtensionCocycle,
};
