//! Floating-point sampling of invariant period matrices and a numerical
//! tangent-space rank, used to cross-check the combinatorial dimension
//! formula and to produce sample complex structures on each component.
//!
//! Nothing here decides a yes/no question; ranks are read off singular
//! values of well-conditioned matrices with a relative threshold.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::types::HodgeType;
use super::HodgeError;
use crate::exactla::Matrix;
use crate::groupcore::{CharacterTable, GroupMatrix, MatrixGroup};

pub type CMatrix = DMatrix<Complex64>;

const RANK_TOLERANCE: f64 = 1e-8;

fn rho(g: &GroupMatrix) -> CMatrix {
    CMatrix::from_fn(g.rows(), g.cols(), |i, j| Complex64::new(g[(i, j)] as f64, 0.0))
}

fn significant(singular: &DVector<f64>) -> usize {
    let max = singular.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    singular.iter().filter(|&&s| s > RANK_TOLERANCE * max.max(1.0)).count()
}

pub fn numeric_rank(m: &CMatrix) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    significant(&m.clone().svd(false, false).singular_values)
}

/// Orthonormal basis of the column space.
fn column_basis(m: &CMatrix) -> CMatrix {
    let svd = m.clone().svd(true, false);
    let k = significant(&svd.singular_values);
    svd.u.expect("left singular vectors requested").columns(0, k).into_owned()
}

/// `(deg χ / |G|) Σ_g conj(χ(g)) ρ(g)`, the projector onto the χ-isotypic part.
pub fn isotypic_projector(group: &MatrixGroup, table: &CharacterTable, chi: usize) -> CMatrix {
    let r = group.rank();
    let mut p = CMatrix::zeros(r, r);
    for (i, g) in group.elements().iter().enumerate() {
        let c = table.value(chi, table.class_of(i)).to_complex().conj();
        p += rho(g) * c;
    }
    p * Complex64::new(table.degree(chi) as f64 / group.order() as f64, 0.0)
}

/// `S^{1/2}` and `S^{-1/2}` for the invariant inner product
/// `S = Σ_g ρ(g)ᵀ ρ(g)`; conjugating by `S^{1/2}` makes `ρ` unitary.
fn unitarizer(group: &MatrixGroup) -> (CMatrix, CMatrix) {
    let r = group.rank();
    let mut s = CMatrix::zeros(r, r);
    for g in group.elements() {
        let m = rho(g);
        s += m.adjoint() * m;
    }
    let eig = s.symmetric_eigen();
    let q = &eig.eigenvectors;
    let root = |p: f64| {
        let d = DVector::from_fn(r, |i, _| Complex64::new(eig.eigenvalues[i].powf(p), 0.0));
        q * CMatrix::from_diagonal(&d) * q.adjoint()
    };
    (root(0.5), root(-0.5))
}

/// A random invariant `V` of Hodge type `t`, as a `2n × n` matrix with
/// orthonormal columns.
///
/// In a unitary frame, a random Hermitian element `X` of the commutant of
/// `G` restricted to the `χ`-isotypic part `U_χ ≅ W_χ ⊗ C^m` acts as
/// `I ⊗ H` for a generic Hermitian `H`; the sum of the eigenspaces of its
/// `d` smallest eigenvalues is a submodule `≅ W_χ^d`.
pub fn sample_omega(group: &MatrixGroup, table: &CharacterTable, t: &HodgeType, seed: u64) -> Result<CMatrix, HodgeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = group.rank();
    let (half, half_inv) = unitarizer(group);
    let unitary: Vec<CMatrix> = group.elements().iter().map(|g| &half * rho(g) * &half_inv).collect();
    let mut columns: Vec<DVector<Complex64>> = Vec::new();
    for class in &t.classes {
        for (&chi, &d) in class.characters.iter().zip(&class.split) {
            if d == 0 {
                continue;
            }
            let k = class.degree;
            let p = &half * isotypic_projector(group, table, chi) * &half_inv;
            let basis = column_basis(&p);
            if basis.ncols() != k * class.multiplicity {
                return Err(HodgeError::NumericalFailure { residual: f64::NAN });
            }
            let a = CMatrix::from_fn(r, r, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let a = &a + a.adjoint();
            let mut x = CMatrix::zeros(r, r);
            for u in &unitary {
                x += u * &a * u.adjoint();
            }
            let eig = (basis.adjoint() * x * &basis).symmetric_eigen();
            let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
            order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
            let take = d * k;
            if take < order.len() {
                let gap = eig.eigenvalues[order[take]] - eig.eigenvalues[order[take - 1]];
                if gap < RANK_TOLERANCE.sqrt() {
                    return Err(HodgeError::NumericalFailure { residual: gap });
                }
            }
            columns.extend(order[..take].iter().map(|&i| &half_inv * (&basis * eig.eigenvectors.column(i))));
        }
    }
    let omega = CMatrix::from_columns(&columns);
    if omega.ncols() * 2 != r {
        return Err(HodgeError::Shape(format!("sampled {} columns for rank {r}", omega.ncols())));
    }
    Ok(column_basis(&omega))
}

/// `dim_C Hom_G(V, V̄)` at `V = span Ω`, from the linear system
/// `conj(P_g) X = X P_g` where `ρ(g) Ω = Ω P_g`.
pub fn tangent_space_dimension(group: &MatrixGroup, omega: &CMatrix) -> usize {
    let b = column_basis(omega);
    let n = b.ncols();
    let bh = b.adjoint();
    let identity = CMatrix::identity(n, n);
    let blocks: Vec<CMatrix> = group
        .generator_matrices()
        .iter()
        .map(|g| {
            let p = &bh * rho(g) * &b;
            let q = p.map(|z| z.conj());
            identity.kronecker(&q) - p.transpose().kronecker(&identity)
        })
        .collect();
    if blocks.is_empty() {
        return n * n;
    }
    let mut stacked = CMatrix::zeros(blocks.len() * n * n, n * n);
    for (k, blk) in blocks.iter().enumerate() {
        stacked.view_mut((k * n * n, 0), (n * n, n * n)).copy_from(blk);
    }
    n * n - numeric_rank(&stacked)
}

/// Multiplicity of every complex irreducible in `span Ω`.
pub fn omega_character_multiplicities(group: &MatrixGroup, table: &CharacterTable, omega: &CMatrix) -> Vec<usize> {
    (0..table.len())
        .map(|chi| numeric_rank(&(isotypic_projector(group, table, chi) * omega)) / table.degree(chi))
        .collect()
}

/// Real matrix of the complex structure with `+i` eigenspace `span Ω`.
pub fn structure_from_omega(omega: &CMatrix) -> Matrix<f64> {
    let n = omega.ncols();
    let mut block = CMatrix::zeros(2 * n, 2 * n);
    block.view_mut((0, 0), (2 * n, n)).copy_from(omega);
    block.view_mut((0, n), (2 * n, n)).copy_from(&omega.map(|z| z.conj()));
    let diag = CMatrix::from_diagonal(&DVector::from_fn(2 * n, |i, _| {
        if i < n {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    }));
    let inv = block.clone().try_inverse().unwrap_or_else(|| CMatrix::zeros(2 * n, 2 * n));
    let j = block * diag * inv;
    Matrix::from_vec(2 * n, 2 * n, (0..2 * n).flat_map(|i| (0..2 * n).map(move |k| (i, k))).map(|(i, k)| j[(i, k)].re).collect())
}
