//! Period matrices `Ω ∈ Mat(2n, n; C)` with exact Gaussian-rational entries.
//!
//! Rows are indexed by the lattice basis of `Λ = Z^{2n}`; the columns of `Ω`
//! span the subspace `V ⊂ Λ ⊗ C`, and the torus is `(Λ ⊗ R)/Λ` with the
//! complex structure whose `+i` eigenspace is `V`.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::HodgeError;
use crate::exactla::{determinant, inverse, rank, Matrix};
use crate::groupcore::{GroupMatrix, MatrixGroup};
use crate::RatMatrix;

pub type Gaussian = Complex<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    m: Matrix<Gaussian>,
}

fn gaussian(re: BigRational, im: BigRational) -> Gaussian {
    Complex::new(re, im)
}

impl OmegaMatrix {
    /// Requires shape `2n × n` with `n ≥ 1`.
    pub fn new(m: Matrix<Gaussian>) -> Result<Self, HodgeError> {
        if m.cols() == 0 || m.rows() != 2 * m.cols() {
            return Err(HodgeError::Shape(format!("period matrix is {}x{}, expected 2n x n", m.rows(), m.cols())));
        }
        Ok(OmegaMatrix { m })
    }

    pub fn matrix(&self) -> &Matrix<Gaussian> {
        &self.m
    }

    pub fn n(&self) -> usize {
        self.m.cols()
    }

    pub fn conj(&self) -> Matrix<Gaussian> {
        self.m.map(Complex::conj)
    }

    /// The `2n × 2n` block matrix `(Ω | Ω̄)`.
    pub fn block(&self) -> Matrix<Gaussian> {
        self.m.hstack(&self.conj())
    }
}

/// `i^n det(Ω | Ω̄)`, which is always real.
pub fn orientation_value(omega: &OmegaMatrix) -> BigRational {
    let det = determinant(&omega.block());
    let i_pow = match omega.n() % 4 {
        0 => gaussian(BigRational::one(), BigRational::zero()),
        1 => gaussian(BigRational::zero(), BigRational::one()),
        2 => gaussian(-BigRational::one(), BigRational::zero()),
        _ => gaussian(BigRational::zero(), -BigRational::one()),
    };
    let v = i_pow * det;
    debug_assert!(v.im.is_zero());
    v.re
}

/// Whether `i^n det(Ω | Ω̄) > 0`; a zero determinant means `V ∩ V̄ ≠ 0`.
pub fn omega_in_t(omega: &OmegaMatrix) -> Result<bool, HodgeError> {
    let v = orientation_value(omega);
    if v.is_zero() {
        return Err(HodgeError::DegenerateOmega);
    }
    Ok(v.is_positive())
}

/// The complex torus determined by `Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusModel {
    /// Complex structure on `Λ ⊗ R`: the pullback of multiplication by `i`
    /// under the projection onto `V` along `V̄`.
    pub j: RatMatrix,
    /// `n × 2n` matrix of the projection `Λ ⊗ R → V ≅ C^n` in the basis
    /// given by the columns of `Ω`.
    pub projection: Matrix<Gaussian>,
    /// Whether `Ω` satisfies the orientation inequality.
    pub positive: bool,
}

/// `J = (Ω | Ω̄) diag(i, -i) (Ω | Ω̄)^-1`.
pub fn torus_from_omega(omega: &OmegaMatrix) -> Result<TorusModel, HodgeError> {
    let positive = omega_in_t(omega)?;
    let n = omega.n();
    let block = omega.block();
    let block_inv = inverse(&block).ok_or(HodgeError::DegenerateOmega)?;
    let i = gaussian(BigRational::zero(), BigRational::one());
    let mut scaled = block.clone();
    for r in 0..2 * n {
        for c in 0..2 * n {
            let f = if c < n { i.clone() } else { -i.clone() };
            scaled[(r, c)] = &scaled[(r, c)] * &f;
        }
    }
    let jc = &scaled * &block_inv;
    let j = jc.map(|z| {
        debug_assert!(z.im.is_zero());
        z.re.clone()
    });
    let projection = block_inv.row_block(0, n);
    Ok(TorusModel { j, projection, positive })
}

/// The subspace action `Ω ↦ L(g) Ω`, whose fixed points (as column spans)
/// are the `G`-invariant subspaces `V`.
pub fn right_action(omega: &OmegaMatrix, g: &GroupMatrix) -> OmegaMatrix {
    let gq = g.map(|&x| gaussian(BigRational::from_integer(x.into()), BigRational::zero()));
    OmegaMatrix { m: &gq * &omega.m }
}

/// Whether two period matrices have the same column span.
pub fn same_span(a: &OmegaMatrix, b: &OmegaMatrix) -> bool {
    let ra = rank(&a.m);
    ra == rank(&b.m) && rank(&a.m.hstack(&b.m)) == ra
}

/// Whether `span Ω` is invariant under every element of `group`.
pub fn is_invariant(omega: &OmegaMatrix, group: &MatrixGroup) -> bool {
    group.generator_matrices().iter().all(|g| same_span(omega, &right_action(omega, g)))
}
