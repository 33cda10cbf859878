//! Extension cocycles, averaged vector systems, translation-conjugacy of
//! vector systems, and torsion-freeness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::group::{CrystGroup, CrystalError};
use crate::exactla::rational::{frac_vec, small_to_int_matrix, small_to_rational_matrix};
use crate::exactla::{solve_rectangular, Matrix};
use crate::groupcore::MatrixGroup;

/// A normalized 2-cocycle `f : G × G → Z^r` for the action of `G` on `Z^r`,
/// stored as `values[g][h]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    values: Vec<Vec<Vec<BigInt>>>,
}

impl ExtensionCocycle {
    /// Wraps the table `values[g][h]`, checking normalization and the
    /// cocycle identity `L(g)f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0`.
    pub fn new(group: &MatrixGroup, values: Vec<Vec<Vec<BigInt>>>) -> Result<Self, CrystalError> {
        let n = group.order();
        let r = group.rank();
        if values.len() != n || values.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != r)) {
            return Err(CrystalError::InvalidInput(format!("cocycle table must be {n}x{n} vectors of length {r}")));
        }
        let f = ExtensionCocycle { values };
        for g in 0..n {
            if f.values[g][0].iter().any(|x| !x.is_zero()) {
                return Err(CrystalError::CocycleViolation { g, h: 0 });
            }
            if f.values[0][g].iter().any(|x| !x.is_zero()) {
                return Err(CrystalError::CocycleViolation { g: 0, h: g });
            }
        }
        let lin: Vec<Matrix<BigInt>> = group.elements().iter().map(small_to_int_matrix).collect();
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                for k in 0..n {
                    let lf = lin[g].mul_vec(&f.values[h][k]);
                    let hk = group.mul(h, k);
                    let ok = (0..r).all(|i| &lf[i] - &f.values[gh][k][i] + &f.values[g][hk][i] - &f.values[g][h][i] == BigInt::zero());
                    if !ok {
                        return Err(CrystalError::CocycleViolation { g, h });
                    }
                }
            }
        }
        Ok(f)
    }

    /// The cocycle `f(g,h) = u_g + L(g)u_h - u_gh` of a vector system.
    pub fn from_vector_system(group: &CrystGroup) -> Self {
        let n = group.order();
        let values = (0..n)
            .map(|g| (0..n).map(|h| group.cocycle_defect(g, h).iter().map(|x| x.to_integer()).collect()).collect())
            .collect();
        ExtensionCocycle { values }
    }

    pub fn value(&self, g: usize, h: usize) -> &[BigInt] {
        &self.values[g][h]
    }

    /// The trivial (split) cocycle.
    pub fn zero(group: &MatrixGroup) -> Self {
        let n = group.order();
        ExtensionCocycle { values: vec![vec![vec![BigInt::zero(); group.rank()]; n]; n] }
    }
}

/// The averaged vector system `u_g = (1/|G|) Σ_h f(g,h)`, exact and not
/// reduced mod `Z^r`. It satisfies `u_gh = L(g)u_h + u_g - f(g,h)`.
pub fn affine_realization(group: &MatrixGroup, f: &ExtensionCocycle) -> Vec<Vec<BigRational>> {
    let n = group.order();
    let r = group.rank();
    let nq = BigRational::from_integer(BigInt::from(n));
    (0..n)
        .map(|g| {
            (0..r)
                .map(|i| {
                    let s: BigInt = (0..n).map(|h| &f.values[g][h][i]).sum();
                    BigRational::from_integer(s) / &nq
                })
                .collect()
        })
        .collect()
}

/// Checks `u_gh = L(g)u_h + u_g - f(g,h)` exactly for all pairs.
pub fn realizes(group: &MatrixGroup, f: &ExtensionCocycle, u: &[Vec<BigRational>]) -> bool {
    let n = group.order();
    let lin: Vec<Matrix<BigRational>> = group.elements().iter().map(small_to_rational_matrix).collect();
    (0..n).all(|g| {
        (0..n).all(|h| {
            let lhs = &u[group.mul(g, h)];
            let lu = lin[g].mul_vec(&u[h]);
            (0..group.rank()).all(|i| lhs[i] == &lu[i] + &u[g][i] - BigRational::from_integer(f.values[g][h][i].clone()))
        })
    })
}

/// Finds `w` with `u_g - u'_g ≡ (L(g) - I) w (mod Z^r)` for every `g`,
/// reduced into `[0,1)^r`, or `None` when the two systems are not
/// conjugate by a translation.
pub fn realizations_equivalent(
    group: &MatrixGroup,
    u: &[Vec<BigRational>],
    u_prime: &[Vec<BigRational>],
) -> Option<Vec<BigRational>> {
    let n = group.order();
    let r = group.rank();
    assert!(u.len() == n && u_prime.len() == n, "vector systems must cover the whole group");
    if n == 1 {
        return Some(vec![BigRational::zero(); r]);
    }
    let mut rows = Vec::with_capacity((n - 1) * r);
    let mut rhs = Vec::with_capacity((n - 1) * r);
    for g in 1..n {
        let a = small_to_int_matrix(&group.element(g).minus_identity());
        for i in 0..r {
            rows.push(a.row(i).to_vec());
            rhs.push(&u[g][i] - &u_prime[g][i]);
        }
    }
    let w = solve_rectangular(&Matrix::from_rows(rows), &rhs)?;
    Some(frac_vec(&w))
}

/// Elements `g ≠ 1` having a fixed point on the torus; empty iff `Γ` is
/// torsion free, i.e. `G` acts freely.
pub fn torsion_elements(group: &CrystGroup) -> Vec<usize> {
    (1..group.order())
        .filter(|&g| {
            let a = small_to_int_matrix(&group.linear_part(g).minus_identity());
            let b: Vec<BigRational> = group.translation(g).iter().map(|x| -x).collect();
            solve_rectangular(&a, &b).is_some()
        })
        .collect()
}

/// Whether `Γ` is torsion free, with the offending elements when not.
pub fn is_torsion_free(group: &CrystGroup) -> (bool, Vec<usize>) {
    let bad = torsion_elements(group);
    (bad.is_empty(), bad)
}
