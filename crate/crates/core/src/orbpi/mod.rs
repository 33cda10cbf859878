//! Orbifold fundamental groups: presentations and their orbifold quotients,
//! the three-lines example, the Platonic-triple criterion, coset
//! enumeration, and compatibility of branch data under coverings.

pub mod coset;
pub mod covering;
pub mod platonic;
pub mod presentation;

use thiserror::Error;

pub use coset::{coset_enumerate, Enumeration};
pub use covering::{covering_compatible, CoveringCheck, CoveringData, Violation};
pub use platonic::{enumerate_triangle_quotient, platonic_check, platonic_class, platonic_report, PlatonicReport};
pub use presentation::{
    central_quotient, commutator, free_reduce, orbifold_quotient, three_lines_group, Presentation, Word,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbError {
    #[error("letter {letter} does not name one of the {generators} generators")]
    BadLetter { letter: i32, generators: usize },
    #[error("{loops} loops but {multiplicities} multiplicities")]
    LengthMismatch { loops: usize, multiplicities: usize },
    #[error("multiplicity {0} is zero")]
    ZeroMultiplicity(usize),
    #[error("multiplicity {0} is smaller than 2")]
    SmallMultiplicity(usize),
}
