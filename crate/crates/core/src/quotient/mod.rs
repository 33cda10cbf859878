//! The action of `G` on the complex torus `T = V / Λ`: fixed loci,
//! free / quasi-free / divisorial classification, pseudoreflections, the
//! subgroup they generate, and the orbifold data of `X = T / G`.

pub mod descriptor;
pub mod fixed;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::CrystGroup;
use crate::exactla::congruence::CongruenceError;
use crate::exactla::rational::small_to_rational_matrix;
use crate::groupcore::MatrixGroup;
use crate::hodge::ComplexStructure;

pub use descriptor::{fixed_components, orbifold_descriptor, DivisorClass, OrbifoldDescriptor, StratumCount};
pub use fixed::{fixed_points, lefschetz_count, ComponentKey, FixedComponent, FixedLocus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
    #[error("group has no element with index {0}")]
    NoSuchElement(usize),
    #[error("complex structure is {got}x{got}, the lattice has rank {rank}")]
    Shape { got: usize, rank: usize },
    #[error("complex structure does not commute with the linear part of generator {0}")]
    NotInvariant(usize),
    #[error("fixed subspace of element {0} has odd real dimension; the complex structure is not invariant")]
    OddFixedSpace(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionClass {
    Free,
    QuasiFree,
    Divisorial,
}

/// Fixed-locus data of one element, as reported in evidence lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusSummary {
    pub element: usize,
    pub real_dimension: usize,
    pub complex_codimension: usize,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionReport {
    pub class: ActionClass,
    /// Smallest complex codimension of a nonempty fixed locus.
    pub minimal_codimension: Option<usize>,
    /// The elements attaining `minimal_codimension`.
    pub evidence: Vec<LocusSummary>,
    /// Every nontrivial element with a nonempty fixed locus.
    pub fixed_elements: Vec<LocusSummary>,
}

/// Checks that `j` is a complex structure on the right space commuting
/// exactly with every linear part.
pub fn check_structure(group: &CrystGroup, j: &ComplexStructure) -> Result<(), QuotientError> {
    let r = group.rank();
    if j.j.rows() != r || j.j.cols() != r {
        return Err(QuotientError::Shape { got: j.j.rows(), rank: r });
    }
    for (k, g) in group.linear().generator_matrices().iter().enumerate() {
        let gq = small_to_rational_matrix(g);
        if &j.j * &gq != &gq * &j.j {
            return Err(QuotientError::NotInvariant(k));
        }
    }
    Ok(())
}

/// Fixed loci of all nontrivial elements, in element order.
pub fn all_fixed_loci(group: &CrystGroup) -> Result<Vec<FixedLocus>, QuotientError> {
    (1..group.order()).map(|g| fixed_points(group, g)).collect()
}

/// Fixed loci after checking that `j` is an invariant complex structure, so
/// that complex dimensions are meaningful.
pub fn complex_fixed_loci(group: &CrystGroup, j: &ComplexStructure) -> Result<Vec<FixedLocus>, QuotientError> {
    check_structure(group, j)?;
    let loci = all_fixed_loci(group)?;
    for f in &loci {
        if f.real_dimension().is_some_and(|d| d % 2 == 1) {
            return Err(QuotientError::OddFixedSpace(f.element));
        }
    }
    Ok(loci)
}

fn summary(f: &FixedLocus) -> Option<LocusSummary> {
    Some(LocusSummary {
        element: f.element,
        real_dimension: f.real_dimension()?,
        complex_codimension: f.complex_codimension()?,
        components: f.component_count(),
    })
}

pub fn classify_action(group: &CrystGroup, j: &ComplexStructure) -> Result<ActionReport, QuotientError> {
    let fixed_elements: Vec<LocusSummary> = complex_fixed_loci(group, j)?.iter().filter_map(summary).collect();
    let minimal_codimension = fixed_elements.iter().map(|s| s.complex_codimension).min();
    let class = match minimal_codimension {
        None => ActionClass::Free,
        Some(c) if c >= 2 => ActionClass::QuasiFree,
        Some(_) => ActionClass::Divisorial,
    };
    let evidence = fixed_elements.iter().filter(|s| Some(s.complex_codimension) == minimal_codimension).cloned().collect();
    Ok(ActionReport { class, minimal_codimension, evidence, fixed_elements })
}

/// Elements whose complex-linear part has a fixed space of complex
/// codimension one and which have a fixed point on `T`.
pub fn pseudoreflections(group: &CrystGroup, j: &ComplexStructure) -> Result<Vec<usize>, QuotientError> {
    Ok(complex_fixed_loci(group, j)?.iter().filter(|f| f.complex_codimension() == Some(1)).map(|f| f.element).collect())
}

/// `G^pr` as sorted element indices of `G`.
pub fn gpr_members(group: &CrystGroup, j: &ComplexStructure) -> Result<Vec<usize>, QuotientError> {
    let pr = pseudoreflections(group, j)?;
    Ok(group.linear().normal_closure(&pr))
}

/// The normal subgroup generated by all pseudoreflections.
pub fn gpr_subgroup(group: &CrystGroup, j: &ComplexStructure) -> Result<MatrixGroup, QuotientError> {
    Ok(group.linear().subgroup(&gpr_members(group, j)?))
}

/// The factorization `T → T / G^pr → X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub group_order: usize,
    pub pseudoreflections: Vec<usize>,
    /// Element indices of `G^pr`.
    pub gpr: Vec<usize>,
    /// `|G / G^pr|`, the order of the group acting on `T / G^pr`.
    pub index: usize,
    /// `G^pr` is trivial, so `T → T / G^pr` is the identity.
    pub first_map_identity: bool,
    /// `G^pr = G`, so `T / G^pr → X` is the identity.
    pub second_map_identity: bool,
    /// Elements outside `G^pr` with a nonempty fixed locus.
    pub audit: Vec<LocusSummary>,
    /// Every audited locus has complex codimension at least 2.
    pub quasi_etale: bool,
}

pub fn factorization_report(group: &CrystGroup, j: &ComplexStructure) -> Result<FactorizationReport, QuotientError> {
    let loci = complex_fixed_loci(group, j)?;
    let pseudoreflections: Vec<usize> =
        loci.iter().filter(|f| f.complex_codimension() == Some(1)).map(|f| f.element).collect();
    let gpr = group.linear().normal_closure(&pseudoreflections);
    let audit: Vec<LocusSummary> =
        loci.iter().filter(|f| gpr.binary_search(&f.element).is_err()).filter_map(summary).collect();
    let quasi_etale = audit.iter().all(|s| s.complex_codimension >= 2);
    Ok(FactorizationReport {
        group_order: group.order(),
        index: group.order() / gpr.len(),
        first_map_identity: gpr.len() == 1,
        second_map_identity: gpr.len() == group.order(),
        pseudoreflections,
        gpr,
        audit,
        quasi_etale,
    })
}
