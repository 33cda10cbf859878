//! The bundled corpus of named example inputs.

use crate::schema::GroupInput;

const ENTRIES: &[(&str, &str)] = &[
    ("bdf_order3", include_str!("../corpus/bdf_order3.json")),
    ("bdf_surface", include_str!("../corpus/bdf_surface.json")),
    ("d4_rank2", include_str!("../corpus/d4_rank2.json")),
    ("klein_rank2", include_str!("../corpus/klein_rank2.json")),
    ("kummer4", include_str!("../corpus/kummer4.json")),
    ("mixed_c2c2", include_str!("../corpus/mixed_c2c2.json")),
    ("neg_identity_rank2", include_str!("../corpus/neg_identity_rank2.json")),
    ("pseudoref_order3", include_str!("../corpus/pseudoref_order3.json")),
    ("pseudoref_product", include_str!("../corpus/pseudoref_product.json")),
    ("pure_translation_rank2", include_str!("../corpus/pure_translation_rank2.json")),
    ("q8_rank4", include_str!("../corpus/q8_rank4.json")),
    ("rank3_c2", include_str!("../corpus/rank3_c2.json")),
    ("reflection_rank2", include_str!("../corpus/reflection_rank2.json")),
    ("rot3_rank2", include_str!("../corpus/rot3_rank2.json")),
    ("rot3_rank4", include_str!("../corpus/rot3_rank4.json")),
    ("rot4_rank2", include_str!("../corpus/rot4_rank2.json")),
    ("rot6_rank2", include_str!("../corpus/rot6_rank2.json")),
    ("s3_rank2", include_str!("../corpus/s3_rank2.json")),
    ("trivial_rank2", include_str!("../corpus/trivial_rank2.json")),
    ("trivial_rank4", include_str!("../corpus/trivial_rank4.json")),
    ("trivial_rank6", include_str!("../corpus/trivial_rank6.json")),
];

/// Names of all bundled inputs, sorted.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

/// Raw JSON text of a bundled input.
pub fn text(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a bundled input; panics only if the bundled file is malformed,
/// which the tests rule out.
pub fn load(name: &str) -> Option<GroupInput> {
    text(name).map(|t| serde_json::from_str(t).unwrap_or_else(|e| panic!("bundled input {name} is malformed: {e}")))
}

/// All bundled inputs in name order.
pub fn all() -> Vec<GroupInput> {
    names().into_iter().filter_map(load).collect()
}
