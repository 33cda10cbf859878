//! Exact linear algebra over the integers and rationals: Hermite and Smith
//! normal forms, rational kernels, and linear congruences on tori.

pub mod congruence;
pub mod matrix;
pub mod normal_form;
pub mod rational;
pub mod serde_exact;

pub use congruence::{solve_mod_lattice, solve_mod_lattice_int, solve_rectangular, CongruenceError, SolutionSet};
pub use matrix::{determinant, inverse, kernel, rank, rref, solve, Field, Matrix};
pub use normal_form::{abs_det, hnf, snf, EuclideanInt, SmithDecomposition};

use num_rational::BigRational;

/// Basis of the rational kernel of `a`.
pub fn kernel_q(a: &Matrix<BigRational>) -> Vec<Vec<BigRational>> {
    kernel(a)
}
