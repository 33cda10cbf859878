//! Report documents emitted by the subcommands.
//!
//! Exact numbers are written as strings (`"p/q"`); every report re-parses
//! into the same value, and serialization is deterministic.

use std::fmt::Write;

use quotori::exactla::rational::{format_rational, to_f64};
use quotori::groupcore::RealType;
use quotori::hodge::ClassSplit;
use quotori::orbpi::Enumeration;
use quotori::quotient::{ActionClass, FactorizationReport, LocusSummary, OrbifoldDescriptor};
use quotori::RatMatrix;
use serde::{Deserialize, Serialize};

pub type StringMatrix = Vec<Vec<String>>;

pub fn rational_rows(m: &RatMatrix) -> StringMatrix {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
}

pub fn rational_list(v: &[num_rational::BigRational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn decimal_rows(m: &RatMatrix) -> StringMatrix {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| format!("{:.12}", to_f64(x))).collect()).collect()
}

/// Short scientific form of a nonnegative rational, e.g. `3.2e-39`.
pub fn scientific(x: &num_rational::BigRational) -> String {
    if num_traits::Zero::is_zero(x) {
        "0".into()
    } else {
        format!("{:.2e}", to_f64(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorOut {
    pub linear: Vec<Vec<i64>>,
    pub translation: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: Option<String>,
    pub rank: usize,
    pub order: usize,
    /// Index of the input lattice in the lattice of all pure translations.
    pub lattice_index: usize,
    pub notice: Option<String>,
    /// Translations (mod the input lattice) that were absorbed.
    pub adjoined: StringMatrix,
    /// Columns: the new lattice basis in input coordinates.
    pub basis: StringMatrix,
    /// Generators in the new basis.
    pub generators: Vec<GeneratorOut>,
    pub torsion_free: bool,
    /// Nontrivial elements with a fixed point.
    pub torsion_elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeReport {
    pub name: Option<String>,
    pub order: usize,
    pub lattice_index: usize,
    /// Pairs `(g, h)` where the extension cocycle is nonzero.
    pub nonzero_cocycle_values: usize,
    /// Averaged vector system, one vector per element.
    pub averaged: StringMatrix,
    /// The averaged system satisfies the cocycle identity exactly.
    pub cocycle_verified: bool,
    /// A translation conjugating the input vector system to the averaged one.
    pub witness: Option<Vec<String>>,
    /// A translation conjugating the input to the zero vector system, if any.
    pub split_witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    pub label: String,
    pub kind: RealType,
    pub degree: usize,
    pub multiplicity: usize,
    pub dim: usize,
    pub parity: String,
    pub splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenReport {
    pub name: Option<String>,
    pub rank: usize,
    pub order: usize,
    pub even: bool,
    pub even_rank: bool,
    pub classes: Vec<ClassOut>,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JstructReport {
    pub name: Option<String>,
    pub found: bool,
    pub mode: Option<String>,
    pub j: Option<StringMatrix>,
    /// `j` rounded to 12 decimals, for reading approximate structures.
    pub j_decimal: Option<StringMatrix>,
    pub square_residual: Option<String>,
    pub commutator_residual: Option<String>,
    pub precision: u32,
    pub seed: u64,
    pub witnesses: Vec<String>,
    pub odd_rank: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionReportOut {
    pub name: Option<String>,
    pub order: usize,
    pub class: ActionClass,
    pub structure_mode: String,
    pub minimal_codimension: Option<usize>,
    pub evidence: Vec<LocusSummary>,
    pub fixed_elements: Vec<LocusSummary>,
    pub torsion_free: bool,
    pub descriptor: OrbifoldDescriptor,
    pub factorization: FactorizationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOut {
    pub classes: Vec<ClassSplit>,
    pub dimension: usize,
    pub component_dimension: usize,
    /// Tangent-space dimension measured numerically at a sampled point.
    pub sampled_tangent_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaOut {
    pub orientation_value: String,
    pub positive: bool,
    pub invariant: bool,
    pub j: StringMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeichReport {
    pub name: Option<String>,
    pub even: bool,
    pub types: Vec<TypeOut>,
    pub omega: Option<OmegaOut>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatonicOut {
    pub triple: [u32; 3],
    pub finite: bool,
    pub class: String,
    pub expected_order: Option<u64>,
    pub generators: usize,
    pub relators: usize,
    pub enumeration: Enumeration,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Verify(VerifyReport),
    Realize(RealizeReport),
    Even(EvenReport),
    Jstruct(JstructReport),
    Action(ActionReportOut),
    Teich(TeichReport),
    Platonic(PlatonicOut),
}

fn class_name(c: ActionClass) -> &'static str {
    match c {
        ActionClass::Free => "free",
        ActionClass::QuasiFree => "quasi-free",
        ActionClass::Divisorial => "divisorial",
    }
}

fn title(name: &Option<String>) -> &str {
    name.as_deref().unwrap_or("input")
}

fn matrix_lines(out: &mut String, m: &StringMatrix) {
    for row in m {
        let _ = writeln!(out, "    [{}]", row.join(", "));
    }
}

fn locus_line(out: &mut String, s: &LocusSummary) {
    let _ = writeln!(
        out,
        "    element {}: {} component(s), real dim {}, complex codim {}",
        s.element, s.components, s.real_dimension, s.complex_codimension
    );
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Verify(r) => {
                let _ = writeln!(out, "{}: crystallographic group of rank {}, point group of order {}", title(&r.name), r.rank, r.order);
                if let Some(n) = &r.notice {
                    let _ = writeln!(out, "  notice: {n}");
                    let _ = writeln!(out, "  new lattice basis (columns):");
                    matrix_lines(&mut out, &r.basis);
                }
                let _ = writeln!(out, "  torsion free: {}", r.torsion_free);
                if !r.torsion_elements.is_empty() {
                    let _ = writeln!(out, "  elements with fixed points: {:?}", r.torsion_elements);
                }
            }
            Report::Realize(r) => {
                let _ = writeln!(out, "{}: {} elements, {} nonzero cocycle values", title(&r.name), r.order, r.nonzero_cocycle_values);
                let _ = writeln!(out, "  averaged vector system (cocycle verified: {}):", r.cocycle_verified);
                matrix_lines(&mut out, &r.averaged);
                match &r.witness {
                    Some(w) => {
                        let _ = writeln!(out, "  equivalent to the input via w = ({})", w.join(", "));
                    }
                    None => {
                        let _ = writeln!(out, "  NOT equivalent to the input");
                    }
                }
                match &r.split_witness {
                    Some(w) => {
                        let _ = writeln!(out, "  translations removable via w = ({})", w.join(", "));
                    }
                    None => {
                        let _ = writeln!(out, "  translations are essential (no conjugating translation)");
                    }
                }
            }
            Report::Even(r) => {
                let verdict = if r.even { "even" } else { "not even" };
                let _ = writeln!(out, "{}: {verdict} (rank {}, point group of order {})", title(&r.name), r.rank, r.order);
                for c in &r.classes {
                    let _ = writeln!(
                        out,
                        "  {:<12} {:<13} degree {} multiplicity {} dim {} {}{}",
                        c.label,
                        format!("{:?}", c.kind).to_lowercase(),
                        c.degree,
                        c.multiplicity,
                        c.dim,
                        c.parity,
                        if c.splits { "" } else { " (no invariant complex structure)" }
                    );
                }
                if !r.even_rank {
                    let _ = writeln!(out, "  odd rank");
                }
            }
            Report::Jstruct(r) => {
                if let (Some(j), Some(mode)) = (&r.j, &r.mode) {
                    let _ = writeln!(out, "{}: invariant complex structure ({mode})", title(&r.name));
                    matrix_lines(&mut out, if mode == "exact" { j } else { r.j_decimal.as_ref().unwrap_or(j) });
                    let _ = writeln!(
                        out,
                        "  |J^2 + I| = {}, |[J, g]| = {}",
                        r.square_residual.as_deref().unwrap_or("?"),
                        r.commutator_residual.as_deref().unwrap_or("?")
                    );
                } else {
                    let _ = writeln!(out, "{}: no invariant complex structure; obstructions {:?}", title(&r.name), r.witnesses);
                }
            }
            Report::Action(r) => {
                let _ = writeln!(out, "{}: action is {} (group of order {})", title(&r.name), class_name(r.class), r.order);
                for s in &r.evidence {
                    locus_line(&mut out, s);
                }
                for d in &r.descriptor.divisors {
                    let _ = writeln!(
                        out,
                        "  divisor through ({}) with multiplicity {}, {} component(s) on the torus",
                        d.base.iter().map(format_rational).collect::<Vec<_>>().join(", "),
                        d.multiplicity,
                        d.components
                    );
                }
                for s in &r.descriptor.strata {
                    let _ = writeln!(
                        out,
                        "  codim {} stratum, stabilizer order {}: {} component(s), {} on the quotient",
                        s.complex_codimension, s.stabilizer_order, s.components, s.orbits
                    );
                }
                let f = &r.factorization;
                let _ = writeln!(
                    out,
                    "  G^pr has order {} (index {}); second map quasi-etale: {}",
                    f.gpr.len(),
                    f.index,
                    f.quasi_etale
                );
            }
            Report::Teich(r) => {
                let _ = writeln!(out, "{}: {} Hodge type(s)", title(&r.name), r.types.len());
                for (k, t) in r.types.iter().enumerate() {
                    let splits: Vec<String> =
                        t.classes.iter().map(|c| format!("{}:{:?}", c.label, c.split)).collect();
                    let _ = writeln!(out, "  type {k}: {} -> component dimension {}", splits.join(" "), t.component_dimension);
                }
                if let Some(o) = &r.omega {
                    let _ = writeln!(
                        out,
                        "  period matrix: orientation value {} (positive: {}), invariant: {}",
                        o.orientation_value, o.positive, o.invariant
                    );
                }
            }
            Report::Platonic(r) => {
                let e = match r.enumeration {
                    Enumeration::Finite(n) => format!("order {n}"),
                    Enumeration::Unknown => format!("unknown after {} cosets", r.bound),
                };
                let _ = writeln!(out, "{:?}: finite = {} ({}); coset enumeration: {e}", r.triple, r.finite, r.class);
            }
        }
        out
    }
}
