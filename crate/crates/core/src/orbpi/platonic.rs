//! The Platonic-triple criterion `1/m1 + 1/m2 + 1/m3 > 1`.

use serde::{Deserialize, Serialize};

use super::coset::{coset_enumerate, Enumeration};
use super::presentation::{central_quotient, three_lines_group};
use super::OrbError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatonicReport {
    pub triple: [u32; 3],
    /// The triple sorted ascending.
    pub sorted: [u32; 3],
    pub finite: bool,
    pub class: String,
    /// `m1 m2 + m2 m3 + m3 m1 - m1 m2 m3`, positive exactly for Platonic triples.
    pub excess: i64,
    /// `2 / (1/m1 + 1/m2 + 1/m3 - 1)` for Platonic triples: the order of the
    /// quotient by the central generator.
    pub expected_order: Option<u64>,
}

fn sorted(m: [u32; 3]) -> [u32; 3] {
    let mut s = m;
    s.sort_unstable();
    s
}

fn excess(m: [u32; 3]) -> i64 {
    let [a, b, c] = m.map(i64::from);
    a * b + b * c + c * a - a * b * c
}

/// Whether `1/m1 + 1/m2 + 1/m3 > 1`, decided in integers.
pub fn platonic_check(m: [u32; 3]) -> bool {
    excess(m) > 0
}

/// Names the family of a triple; every `m_i` must be at least 2.
pub fn platonic_class(m: [u32; 3]) -> &'static str {
    match sorted(m) {
        [2, 2, _] => "dihedral family",
        [2, 3, 3] => "tetrahedral family",
        [2, 3, 4] => "octahedral family",
        [2, 3, 5] => "icosahedral family",
        s if excess(s) == 0 => "euclidean",
        _ => "hyperbolic",
    }
}

pub fn platonic_report(m: [u32; 3]) -> Result<PlatonicReport, OrbError> {
    if let Some(i) = m.iter().position(|&k| k < 2) {
        return Err(OrbError::SmallMultiplicity(i + 1));
    }
    let e = excess(m);
    let [a, b, c] = m.map(u64::from);
    let expected_order = (e > 0).then(|| 2 * a * b * c / e as u64);
    Ok(PlatonicReport {
        triple: m,
        sorted: sorted(m),
        finite: e > 0,
        class: platonic_class(m).to_string(),
        excess: e,
        expected_order,
    })
}

/// Coset enumeration of the three-lines group modulo its centre.
pub fn enumerate_triangle_quotient(m: [u32; 3], bound: usize) -> Result<Enumeration, OrbError> {
    Ok(coset_enumerate(&central_quotient(&three_lines_group(m)?)?, bound))
}
