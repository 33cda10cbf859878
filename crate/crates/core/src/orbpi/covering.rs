//! Compatibility of branch data under an orbifold covering: a divisor `D_i`
//! of multiplicity `m_i` mapping with local degree `a_i` onto a divisor
//! `B_j` of multiplicity `n_j` requires `n_j = a_i m_i`.

use serde::{Deserialize, Serialize};

/// Divisors are numbered from 1 on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringData {
    /// `m_i` for each source divisor `D_i`.
    pub source: Vec<u64>,
    /// `n_j` for each target divisor `B_j`.
    pub target: Vec<u64>,
    /// `j` with `D_i ↦ B_j`, one entry per source divisor.
    pub map: Vec<usize>,
    /// Local degree `a_i` of the map along `D_i`.
    pub degree: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    /// `map` or `degree` does not have one entry per source divisor.
    Shape { source: usize, map: usize, degree: usize },
    /// `D_i` is sent to a target divisor that does not exist.
    NoSuchTarget { i: usize, j: usize },
    /// `n_j ≠ a_i m_i`.
    Multiplicity { i: usize, j: usize, expected: u64, found: u64 },
    /// No source divisor lies over `B_j`.
    Uncovered { j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringCheck {
    pub compatible: bool,
    pub violations: Vec<Violation>,
}

pub fn covering_compatible(c: &CoveringData) -> CoveringCheck {
    let mut violations = Vec::new();
    if c.map.len() != c.source.len() || c.degree.len() != c.source.len() {
        violations.push(Violation::Shape { source: c.source.len(), map: c.map.len(), degree: c.degree.len() });
        return CoveringCheck { compatible: false, violations };
    }
    let mut hit = vec![false; c.target.len()];
    for (idx, ((&m, &j), &a)) in c.source.iter().zip(&c.map).zip(&c.degree).enumerate() {
        let i = idx + 1;
        if j == 0 || j > c.target.len() {
            violations.push(Violation::NoSuchTarget { i, j });
            continue;
        }
        hit[j - 1] = true;
        let expected = a.saturating_mul(m);
        if c.target[j - 1] != expected {
            violations.push(Violation::Multiplicity { i, j, expected, found: c.target[j - 1] });
        }
    }
    violations.extend(hit.iter().enumerate().filter(|(_, &h)| !h).map(|(j, _)| Violation::Uncovered { j: j + 1 }));
    CoveringCheck { compatible: violations.is_empty(), violations }
}
