//! Command dispatch for the `quotori` binary, usable as a library so that
//! reports can be produced and checked in-process.

pub mod report;

use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::Zero;
use quotori::corpus;
use quotori::crystal::{
    affine_realization, is_torsion_free, normalize_action, realizations_equivalent, realizes, CrystGroup,
    CrystalError, ExtensionCocycle, NormalizedAction,
};
use quotori::exactla::rational::format_rational;
use quotori::groupcore::{character_table, DEFAULT_ORDER_BOUND};
use quotori::hodge::numeric::{sample_omega, tangent_space_dimension};
use quotori::hodge::{
    component_dimension, evenness_with_table, hodge_types_with_table, invariant_complex_structure, is_invariant,
    orientation_value, torus_from_omega, HodgeError, StructureOptions, StructureOutcome,
};
use quotori::orbpi::{central_quotient, coset_enumerate, platonic_report, three_lines_group};
use quotori::quotient::{classify_action, factorization_report, orbifold_descriptor, QuotientError};
use quotori::schema::{GroupInput, PlatonicInput};
use serde::de::DeserializeOwned;
use thiserror::Error;

use report::*;

/// Default coset bound for the enumeration cross-check.
pub const DEFAULT_COSET_BOUND: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Verify,
    Realize,
    Even,
    Jstruct,
    Action,
    Teich,
    Platonic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Path(PathBuf),
    Corpus(String),
    Text(String),
}

/// One invocation: command, input, and overrides of the input's options.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub command: Command,
    pub source: Source,
    pub seed: Option<u64>,
    pub bound: Option<usize>,
    pub precision: Option<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed or mathematically invalid input: exit code 1.
    #[error("{0}")]
    Validation(String),
    /// A computation failed on valid input: exit code 2.
    #[error("internal failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<CrystalError> for CliError {
    fn from(e: CrystalError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<HodgeError> for CliError {
    fn from(e: HodgeError) -> Self {
        match e {
            HodgeError::NotEven(_) | HodgeError::Shape(_) | HodgeError::DegenerateOmega => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::Shape { .. } | QuotientError::NotInvariant(_) | QuotientError::NoSuchElement(_) => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Parses a JSON document, reporting the path and position of any error.
pub fn parse_document<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Validation(format!("{origin}: at `{path}`: {}", e.into_inner()))
    })
}

fn read_source(source: &Source) -> Result<(String, String), CliError> {
    match source {
        Source::Path(p) if p.as_os_str() == "-" => {
            let text = std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Validation(format!("stdin: {e}")))?;
            Ok((text, "stdin".into()))
        }
        Source::Path(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Validation(format!("{}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        Source::Corpus(name) => corpus::text(name)
            .map(|t| (t.to_string(), name.clone()))
            .ok_or_else(|| CliError::Validation(format!("no bundled input named {name:?}; known: {}", corpus::names().join(", ")))),
        Source::Text(t) => Ok((t.clone(), "input".into())),
    }
}

struct Prepared {
    input: GroupInput,
    normalized: NormalizedAction,
    seed: u64,
    precision: u32,
}

impl Prepared {
    fn group(&self) -> &CrystGroup {
        &self.normalized.group
    }
}

fn prepare(job: &Job, text: &str, origin: &str) -> Result<Prepared, CliError> {
    let input: GroupInput = parse_document(text, origin)?;
    let data = input.crystal_data().map_err(|e| CliError::Validation(format!("{origin}: {e}")))?;
    let bound = job.bound.or(input.options.bound).unwrap_or(DEFAULT_ORDER_BOUND);
    let normalized = normalize_action(&data, bound)?;
    let seed = job.seed.or(input.options.seed).unwrap_or(0);
    let precision = job.precision.or(input.options.precision).unwrap_or(128);
    Ok(Prepared { input, normalized, seed, precision })
}

/// Runs one job.
pub fn run(job: &Job) -> Result<Report, CliError> {
    let (text, origin) = read_source(&job.source)?;
    if job.command == Command::Platonic {
        let input: PlatonicInput = parse_document(&text, &origin)?;
        return cmd_platonic(&input, job.bound);
    }
    let p = prepare(job, &text, &origin)?;
    match job.command {
        Command::Verify => cmd_verify(&p),
        Command::Realize => cmd_realize(&p),
        Command::Even => cmd_even(&p),
        Command::Jstruct => cmd_jstruct(&p),
        Command::Action => cmd_action(&p),
        Command::Teich => cmd_teich(&p),
        Command::Platonic => unreachable!("handled above"),
    }
}

/// Serializes a report in the requested format; JSON output ends with a newline.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn cmd_verify(p: &Prepared) -> Result<Report, CliError> {
    let g = p.group();
    let n = &p.normalized;
    let notice = (n.index > 1).then(|| {
        format!(
            "the group contains {} pure translation(s) outside the given lattice; the lattice was enlarged by index {} and the generators rewritten in the new basis",
            n.adjoined.len(),
            n.index
        )
    });
    let (torsion_free, torsion_elements) = is_torsion_free(g);
    let generators = g
        .generator_data()
        .generators
        .iter()
        .map(|a| GeneratorOut { linear: a.linear.to_rows(), translation: rational_list(&a.translation) })
        .collect();
    Ok(Report::Verify(VerifyReport {
        name: p.input.name.clone(),
        rank: g.rank(),
        order: g.order(),
        lattice_index: n.index,
        notice,
        adjoined: n.adjoined.iter().map(|t| rational_list(t)).collect(),
        basis: rational_rows(&n.basis),
        generators,
        torsion_free,
        torsion_elements,
    }))
}

fn cmd_realize(p: &Prepared) -> Result<Report, CliError> {
    let g = p.group();
    let lin = g.linear();
    let f = ExtensionCocycle::from_vector_system(g);
    let n = g.order();
    let nonzero_cocycle_values =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| f.value(a, b).iter().any(|x| !x.is_zero())).count();
    let averaged = affine_realization(lin, &f);
    let cocycle_verified = realizes(lin, &f, &averaged);
    let witness = realizations_equivalent(lin, g.vector_system(), &averaged);
    let zero = vec![vec![BigRational::zero(); g.rank()]; n];
    let split_witness = realizations_equivalent(lin, g.vector_system(), &zero);
    Ok(Report::Realize(RealizeReport {
        name: p.input.name.clone(),
        order: n,
        lattice_index: p.normalized.index,
        nonzero_cocycle_values,
        averaged: averaged.iter().map(|u| rational_list(u)).collect(),
        cocycle_verified,
        witness: witness.map(|w| rational_list(&w)),
        split_witness: split_witness.map(|w| rational_list(&w)),
    }))
}

fn cmd_even(p: &Prepared) -> Result<Report, CliError> {
    let g = p.group();
    let table = character_table(g.linear()).map_err(|e| CliError::Internal(e.to_string()))?;
    let r = evenness_with_table(g, &table)?;
    let classes = r
        .isotypic
        .classes
        .iter()
        .map(|c| ClassOut {
            label: c.label.clone(),
            kind: c.kind,
            degree: c.degree,
            multiplicity: c.multiplicity,
            dim: c.complex_dim,
            parity: if c.even { "even" } else { "odd" }.into(),
            splits: c.splits,
        })
        .collect();
    Ok(Report::Even(EvenReport {
        name: p.input.name.clone(),
        rank: r.rank,
        order: g.order(),
        even: r.even,
        even_rank: r.even_rank,
        classes,
        witnesses: r.witnesses,
    }))
}

fn options(p: &Prepared) -> StructureOptions {
    StructureOptions { seed: p.seed, precision: p.precision, ..StructureOptions::default() }
}

fn cmd_jstruct(p: &Prepared) -> Result<Report, CliError> {
    let base = JstructReport {
        name: p.input.name.clone(),
        found: false,
        mode: None,
        j: None,
        j_decimal: None,
        square_residual: None,
        commutator_residual: None,
        precision: p.precision,
        seed: p.seed,
        witnesses: Vec::new(),
        odd_rank: false,
    };
    Ok(Report::Jstruct(match invariant_complex_structure(p.group(), &options(p))? {
        StructureOutcome::Found(j) => JstructReport {
            found: true,
            mode: Some(if j.is_exact() { "exact" } else { "approximate" }.into()),
            j: Some(rational_rows(&j.j)),
            j_decimal: Some(decimal_rows(&j.j)),
            square_residual: Some(scientific(&j.square_residual)),
            commutator_residual: Some(scientific(&j.commutator_residual)),
            ..base
        },
        StructureOutcome::NotEven { witnesses, odd_rank } => JstructReport { witnesses, odd_rank, ..base },
    }))
}

fn cmd_action(p: &Prepared) -> Result<Report, CliError> {
    let g = p.group();
    let j = match invariant_complex_structure(g, &options(p))? {
        StructureOutcome::Found(j) => j,
        StructureOutcome::NotEven { witnesses, .. } => {
            return Err(CliError::Validation(format!(
                "the group is not even (obstructions {witnesses:?}); there is no complex torus to act on"
            )))
        }
    };
    let a = classify_action(g, &j)?;
    Ok(Report::Action(ActionReportOut {
        name: p.input.name.clone(),
        order: g.order(),
        class: a.class,
        structure_mode: if j.is_exact() { "exact" } else { "approximate" }.into(),
        minimal_codimension: a.minimal_codimension,
        evidence: a.evidence,
        fixed_elements: a.fixed_elements,
        torsion_free: is_torsion_free(g).0,
        descriptor: orbifold_descriptor(g, &j)?,
        factorization: factorization_report(g, &j)?,
    }))
}

fn cmd_teich(p: &Prepared) -> Result<Report, CliError> {
    let g = p.group();
    let table = character_table(g.linear()).map_err(|e| CliError::Internal(e.to_string()))?;
    let even = evenness_with_table(g, &table)?.even;
    let mut types = Vec::new();
    if even {
        for (k, t) in hodge_types_with_table(g, &table)?.into_iter().enumerate() {
            let omega = sample_omega(g.linear(), &table, &t, p.seed.wrapping_add(k as u64))?;
            types.push(TypeOut {
                dimension: t.dimension(),
                component_dimension: component_dimension(&t),
                sampled_tangent_dimension: tangent_space_dimension(g.linear(), &omega),
                classes: t.classes,
            });
        }
    }
    let omega = match p.input.omega_matrix() {
        None => None,
        Some(Err(e)) => return Err(CliError::Validation(e.to_string())),
        Some(Ok(o)) => {
            if p.normalized.index > 1 {
                return Err(CliError::Validation(
                    "a period matrix cannot be combined with an input whose lattice has to be enlarged".into(),
                ));
            }
            let torus = torus_from_omega(&o)?;
            Some(OmegaOut {
                orientation_value: format_rational(&orientation_value(&o)),
                positive: torus.positive,
                invariant: is_invariant(&o, g.linear()),
                j: rational_rows(&torus.j),
            })
        }
    };
    Ok(Report::Teich(TeichReport { name: p.input.name.clone(), even, types, omega, seed: p.seed }))
}

fn cmd_platonic(input: &PlatonicInput, bound: Option<usize>) -> Result<Report, CliError> {
    let r = platonic_report(input.triple).map_err(|e| CliError::Validation(e.to_string()))?;
    let bound = bound.or(input.bound).unwrap_or(DEFAULT_COSET_BOUND);
    let lines = three_lines_group(input.triple).map_err(|e| CliError::Validation(e.to_string()))?;
    let quotient = central_quotient(&lines).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Report::Platonic(PlatonicOut {
        triple: r.triple,
        finite: r.finite,
        class: r.class,
        expected_order: r.expected_order,
        generators: lines.rank(),
        relators: lines.relators.len(),
        enumeration: coset_enumerate(&quotient, bound),
        bound,
    }))
}

/// Runs `command` on every bundled input, isolating failures per entry.
pub fn run_batch(command: Command, seed: Option<u64>, bound: Option<usize>, precision: Option<u32>) -> Vec<(String, Result<Report, CliError>)> {
    corpus::names()
        .into_iter()
        .map(|name| {
            let job = Job { command, source: Source::Corpus(name.to_string()), seed, bound, precision };
            (name.to_string(), run(&job))
        })
        .collect()
}
