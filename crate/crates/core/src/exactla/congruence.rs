//! Linear congruences on the real torus `R^r / Z^r`.
//!
//! Everything goes through the Smith form `u A v = d`: substituting
//! `x = v y` turns `A x ≡ b (mod Z^m)` into the diagonal system
//! `d_i y_i ≡ (u b)_i`, which is solved coordinate by coordinate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::matrix::Matrix;
use super::normal_form::{snf, SmithDecomposition};
use super::rational::{frac, frac_vec, to_integer_matrix, to_rational_matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("matrix is {rows}x{cols}, a square matrix is required")]
    NotSquare { rows: usize, cols: usize },
    #[error("right-hand side has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix has non-integral entries; the congruence is not well defined on the torus")]
    NonIntegral,
    #[error("solution set has {0} points, more than the enumeration limit")]
    TooManyPoints(String),
}

/// One connected component of a positive-dimensional solution family: the
/// translate `base + span(directions)` of a subtorus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyComponent {
    pub base: Vec<BigRational>,
}

/// Solutions of `A x ≡ b (mod Z^r)` for square integral `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    /// Representatives in `[0,1)^r`, sorted lexicographically.
    Finite(Vec<Vec<BigRational>>),
    /// A union of parallel subtori of real dimension `directions.len()`.
    Family {
        /// Integral vectors spanning the real kernel of `A`; they also
        /// generate the lattice `ker A ∩ Z^r`.
        directions: Vec<Vec<BigInt>>,
        /// One base point per connected component, reduced into `[0,1)^r`.
        components: Vec<FamilyComponent>,
    },
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    /// Real dimension of the solution set, `None` when empty.
    pub fn real_dimension(&self) -> Option<usize> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Finite(_) => Some(0),
            SolutionSet::Family { directions, .. } => Some(directions.len()),
        }
    }

    /// Number of connected components (points, for a finite set).
    pub fn component_count(&self) -> usize {
        match self {
            SolutionSet::Empty => 0,
            SolutionSet::Finite(pts) => pts.len(),
            SolutionSet::Family { components, .. } => components.len(),
        }
    }

    /// Base point of every component.
    pub fn base_points(&self) -> Vec<Vec<BigRational>> {
        match self {
            SolutionSet::Empty => Vec::new(),
            SolutionSet::Finite(pts) => pts.clone(),
            SolutionSet::Family { components, .. } => components.iter().map(|c| c.base.clone()).collect(),
        }
    }
}

/// Hard cap on enumerated components; `|det A|` beyond this is reported as
/// an error rather than silently truncated.
pub const MAX_ENUMERATED_POINTS: u64 = 1 << 20;

/// Solves `A x ≡ b (mod Z^r)` for square `A` with integral entries.
///
/// Accepts rational `A` as long as every entry is an integer.
pub fn solve_mod_lattice(a: &Matrix<BigRational>, b: &[BigRational]) -> Result<SolutionSet, CongruenceError> {
    if !a.is_square() {
        return Err(CongruenceError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let ai = to_integer_matrix(a).ok_or(CongruenceError::NonIntegral)?;
    solve_mod_lattice_int(&ai, b)
}

pub fn solve_mod_lattice_int(a: &Matrix<BigInt>, b: &[BigRational]) -> Result<SolutionSet, CongruenceError> {
    if !a.is_square() {
        return Err(CongruenceError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if b.len() != a.rows() {
        return Err(CongruenceError::LengthMismatch { expected: a.rows(), got: b.len() });
    }
    let r = a.rows();
    let s = snf(a);
    let ub = to_rational_matrix(&s.u).mul_vec(b);
    let diag = s.diagonal();

    // choices[i] lists the admissible values of y_i mod 1 for pinned coordinates
    let mut choices: Vec<Vec<BigRational>> = Vec::new();
    let mut free = Vec::new();
    let mut total: u64 = 1;
    for i in 0..r {
        let d = &diag[i];
        if d.is_zero() {
            if !ub[i].is_integer() {
                return Ok(SolutionSet::Empty);
            }
            free.push(i);
            choices.push(vec![BigRational::zero()]);
        } else {
            let dq = BigRational::from_integer(d.clone());
            let count = d.to_u64().unwrap_or(u64::MAX);
            total = total.saturating_mul(count);
            if total > MAX_ENUMERATED_POINTS {
                return Err(CongruenceError::TooManyPoints(format!(">{MAX_ENUMERATED_POINTS}")));
            }
            let base = &ub[i] / &dq;
            choices.push((0..count).map(|j| frac(&(&base + BigRational::from_integer(BigInt::from(j)) / &dq))).collect());
        }
    }

    let vq = to_rational_matrix(&s.v);
    let mut points = Vec::with_capacity(total as usize);
    for mut k in 0..total {
        let y: Vec<BigRational> = choices
            .iter()
            .map(|c| {
                let len = c.len() as u64;
                let pick = (k % len) as usize;
                k /= len;
                c[pick].clone()
            })
            .collect();
        points.push(frac_vec(&vq.mul_vec(&y)));
    }
    points.sort();
    points.dedup();

    if free.is_empty() {
        Ok(SolutionSet::Finite(points))
    } else {
        let directions = free.iter().map(|&j| s.v.column(j)).collect();
        Ok(SolutionSet::Family { directions, components: points.into_iter().map(|base| FamilyComponent { base }).collect() })
    }
}

/// Finds some `x ∈ Q^n` with `A x ≡ b (mod Z^m)` for a rectangular integer
/// matrix `A` (`m x n`), or `None` if no real solution exists.
pub fn solve_rectangular(a: &Matrix<BigInt>, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len());
    let SmithDecomposition { d, u, v } = snf(a);
    let ub = to_rational_matrix(&u).mul_vec(b);
    let mut y = vec![BigRational::zero(); a.cols()];
    for (i, rhs) in ub.iter().enumerate() {
        let di = if i < a.cols() { d[(i, i)].clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !rhs.is_integer() {
                return None;
            }
        } else {
            y[i] = rhs / BigRational::from_integer(di);
        }
    }
    Some(to_rational_matrix(&v).mul_vec(&y))
}

/// Basis of the saturated lattice `ker A ∩ Z^n` (integral, HNF-canonical).
pub fn integer_kernel(a: &Matrix<BigInt>) -> Vec<Vec<BigInt>> {
    let s = snf(a);
    let rank = s.rank();
    let cols: Vec<Vec<BigInt>> = (rank..a.cols()).map(|j| s.v.column(j)).collect();
    canonical_lattice_basis(&cols)
}

/// HNF-reduced basis (as row vectors) of the lattice spanned by `vectors`.
pub fn canonical_lattice_basis(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec());
    let (h, _) = super::normal_form::hnf(&m);
    (0..h.rows()).map(|i| h.row(i).to_vec()).filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::{rat, ratio};

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn doubling_map_has_sixteen_half_points() {
        let a = Matrix::<BigRational>::identity(4).scale(&rat(2));
        let sol = solve_mod_lattice(&a, &vec![rat(0); 4]).unwrap();
        // oracle: all (a1..a4)/2 with ai in {0,1}
        let mut expected = Vec::new();
        for mask in 0..16u32 {
            expected.push((0..4).map(|i| ratio(((mask >> i) & 1) as i64, 2)).collect::<Vec<_>>());
        }
        expected.sort();
        assert_eq!(sol, SolutionSet::Finite(expected));
    }

    #[test]
    fn identity_solution_is_unique() {
        let sol = solve_mod_lattice(&qm(&[&[1, 0], &[0, 1]]), &[ratio(1, 3), rat(0)]).unwrap();
        // x ≡ 1/3; the spec example's "(2/3, 0)" corresponds to the opposite sign convention
        assert_eq!(sol, SolutionSet::Finite(vec![vec![ratio(1, 3), rat(0)]]));
        let sol = solve_mod_lattice(&qm(&[&[1, 0], &[0, 1]]), &[ratio(-1, 3), rat(0)]).unwrap();
        assert_eq!(sol, SolutionSet::Finite(vec![vec![ratio(2, 3), rat(0)]]));
    }

    #[test]
    fn inconsistent_zero_row_is_empty() {
        let sol = solve_mod_lattice(&qm(&[&[0, 0], &[0, -2]]), &[ratio(1, 2), rat(0)]).unwrap();
        assert_eq!(sol, SolutionSet::Empty);
    }

    #[test]
    fn family_components_are_counted() {
        let sol = solve_mod_lattice(&qm(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, -2]]), &vec![rat(0); 4])
            .unwrap();
        assert_eq!(sol.real_dimension(), Some(2));
        assert_eq!(sol.component_count(), 4);
    }

    #[test]
    fn rejects_non_square_and_fractional() {
        let a = Matrix::from_rows(vec![vec![rat(1), rat(0)]]);
        assert!(matches!(solve_mod_lattice(&a, &[rat(0)]), Err(CongruenceError::NotSquare { .. })));
        let a = qm(&[&[1, 0], &[0, 1]]).scale(&ratio(1, 2));
        assert_eq!(solve_mod_lattice(&a, &[rat(0), rat(0)]), Err(CongruenceError::NonIntegral));
    }

    #[test]
    fn rectangular_solver() {
        let a = Matrix::from_rows(vec![vec![BigInt::from(0), BigInt::from(0)], vec![BigInt::from(0), BigInt::from(-2)]]);
        let x = solve_rectangular(&a, &[rat(0), ratio(-1, 3)]).unwrap();
        let ax = to_rational_matrix(&a).mul_vec(&x);
        assert!((ax[1].clone() + ratio(1, 3)).is_integer());
        assert!(solve_rectangular(&a, &[ratio(1, 2), rat(0)]).is_none());
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let a = Matrix::from_rows(vec![vec![BigInt::from(2), BigInt::from(4)]]);
        assert_eq!(integer_kernel(&a), vec![vec![BigInt::from(2), BigInt::from(-1)]]);
    }
}
