//! Fixed loci of single group elements on the torus `T = R^r / Z^r`.
//!
//! A point `v` is fixed by `g` when `L(g) v + u_g ≡ v`, i.e.
//! `(L(g) - I) v ≡ -u_g (mod Z^r)`. The solution set is a finite union of
//! translates of the subtorus `ker(L(g) - I) / (ker ∩ Z^r)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::QuotientError;
use crate::crystal::CrystGroup;
use crate::exactla::congruence::{canonical_lattice_basis, integer_kernel, solve_mod_lattice_int, SolutionSet};
use crate::exactla::rational::{frac_vec, small_to_int_matrix, small_to_rational_matrix, to_rational_matrix};
use crate::exactla::{determinant, Matrix};

/// Canonical label of a connected subtorus translate `p + K_R (mod Z^r)`:
/// the HNF basis of the saturated lattice `K` and the image of `p` in
/// `R^r / (K_R + Z^r) ≅ R^{r-k} / Z^{r-k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentKey {
    pub kernel: Vec<Vec<BigInt>>,
    pub offset: Vec<BigRational>,
}

/// One connected component of a fixed locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComponent {
    pub key: ComponentKey,
    /// A point of the component, in `[0,1)^r`.
    pub base: Vec<BigRational>,
}

impl FixedComponent {
    /// Builds the component `base + span(kernel)`; `kernel` must span a
    /// saturated lattice (it is re-reduced to canonical form here).
    pub fn new(kernel: &[Vec<BigInt>], base: Vec<BigRational>) -> Self {
        let kernel = canonical_lattice_basis(kernel);
        let offset = frac_vec(&annihilator(&kernel, base.len()).mul_vec(&base));
        FixedComponent { key: ComponentKey { kernel, offset }, base: frac_vec(&base) }
    }

    pub fn real_dimension(&self) -> usize {
        self.key.kernel.len()
    }

    /// Image under the affine map of element `h`.
    pub fn image(&self, group: &CrystGroup, h: usize) -> FixedComponent {
        let l = group.linear_part(h);
        let kernel: Vec<Vec<BigInt>> = self
            .key
            .kernel
            .iter()
            .map(|k| small_to_int_matrix(l).mul_vec(k))
            .collect();
        let base: Vec<BigRational> = small_to_rational_matrix(l)
            .mul_vec(&self.base)
            .iter()
            .zip(group.translation(h))
            .map(|(a, b)| a + b)
            .collect();
        FixedComponent::new(&kernel, base)
    }

    /// Whether element `h` fixes the component pointwise.
    pub fn fixed_pointwise_by(&self, group: &CrystGroup, h: usize) -> bool {
        let a = group.linear_part(h).minus_identity();
        let ai = small_to_int_matrix(&a);
        if self.key.kernel.iter().any(|k| ai.mul_vec(k).iter().any(|x| !x.is_zero())) {
            return false;
        }
        small_to_rational_matrix(&a)
            .mul_vec(&self.base)
            .iter()
            .zip(group.translation(h))
            .all(|(x, u)| (x + u).is_integer())
    }
}

/// Integer matrix whose rows form a basis of the lattice of integral
/// functionals vanishing on `kernel`; the identity when `kernel` is empty.
fn annihilator(kernel: &[Vec<BigInt>], r: usize) -> Matrix<BigRational> {
    if kernel.is_empty() {
        return Matrix::identity(r);
    }
    let rows = integer_kernel(&Matrix::from_rows(kernel.to_vec()));
    if rows.is_empty() {
        return Matrix::zeros(0, r);
    }
    to_rational_matrix(&Matrix::from_rows(rows))
}

/// The fixed locus of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocus {
    pub element: usize,
    /// Complex dimension `n` of the torus.
    pub n: usize,
    pub solutions: SolutionSet,
}

impl FixedLocus {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn real_dimension(&self) -> Option<usize> {
        self.solutions.real_dimension()
    }

    /// Complex dimension with respect to any `G`-invariant complex structure,
    /// whose `+i` eigenspace meets `ker(L(g) - I)` in half its real dimension.
    pub fn complex_dimension(&self) -> Option<usize> {
        self.real_dimension().map(|d| d / 2)
    }

    pub fn complex_codimension(&self) -> Option<usize> {
        self.complex_dimension().map(|d| self.n - d)
    }

    /// Number of points for a zero-dimensional locus.
    pub fn cardinality(&self) -> Option<usize> {
        match &self.solutions {
            SolutionSet::Empty => Some(0),
            SolutionSet::Finite(p) => Some(p.len()),
            SolutionSet::Family { .. } => None,
        }
    }

    pub fn component_count(&self) -> usize {
        self.solutions.component_count()
    }

    /// The connected components with their canonical keys.
    pub fn components(&self) -> Vec<FixedComponent> {
        match &self.solutions {
            SolutionSet::Empty => Vec::new(),
            SolutionSet::Finite(pts) => pts.iter().map(|p| FixedComponent::new(&[], p.clone())).collect(),
            SolutionSet::Family { directions, components } => {
                components.iter().map(|c| FixedComponent::new(directions, c.base.clone())).collect()
            }
        }
    }
}

/// Solves `(L(g) - I) v ≡ -u_g (mod Z^r)`.
pub fn fixed_points(group: &CrystGroup, g: usize) -> Result<FixedLocus, QuotientError> {
    if g >= group.order() {
        return Err(QuotientError::NoSuchElement(g));
    }
    let a = small_to_int_matrix(&group.linear_part(g).minus_identity());
    let b: Vec<BigRational> = group.translation(g).iter().map(|x| -x).collect();
    let solutions = solve_mod_lattice_int(&a, &b)?;
    Ok(FixedLocus { element: g, n: group.rank() / 2, solutions })
}

/// `|det(L(g) - I)|`, the number of fixed points when it is nonzero.
pub fn lefschetz_count(group: &CrystGroup, g: usize) -> BigInt {
    let d = determinant(&small_to_rational_matrix(&group.linear_part(g).minus_identity()));
    debug_assert!(d.is_integer());
    let d = d.to_integer();
    if d < BigInt::zero() {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{verify_crystallographic, AffineMap, CrystData};
    use crate::exactla::rational::{rat, ratio};
    use crate::groupcore::GroupMatrix;

    fn diag(d: &[i64]) -> GroupMatrix {
        Matrix::from_diagonal(d)
    }

    fn single(l: GroupMatrix, u: Vec<BigRational>) -> CrystGroup {
        let r = l.rows();
        verify_crystallographic(&CrystData::new(r, vec![AffineMap::new(l, u)]), 64).unwrap()
    }

    #[test]
    fn kummer_has_sixteen_half_points() {
        let g = single(GroupMatrix::identity(4).scale(&-1), vec![rat(0); 4]);
        let f = fixed_points(&g, 1).unwrap();
        assert_eq!(f.cardinality(), Some(16));
        assert_eq!(f.complex_codimension(), Some(2));
        assert_eq!(lefschetz_count(&g, 1), BigInt::from(16));
        assert!(f.components().iter().all(|c| c.base.iter().all(|x| x == &rat(0) || x == &ratio(1, 2))));
    }

    #[test]
    fn translated_reflection_is_free() {
        let g = single(diag(&[1, 1, -1, -1]), vec![ratio(1, 2), rat(0), rat(0), rat(0)]);
        assert!(fixed_points(&g, 1).unwrap().is_empty());
    }

    #[test]
    fn reflection_fixes_four_curves() {
        let g = single(diag(&[1, 1, -1, -1]), vec![rat(0); 4]);
        let f = fixed_points(&g, 1).unwrap();
        assert_eq!(f.real_dimension(), Some(2));
        assert_eq!(f.component_count(), 4);
        assert_eq!(f.complex_codimension(), Some(1));
        let comps = f.components();
        let mut keys: Vec<_> = comps.iter().map(|c| c.key.clone()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 4);
    }

    #[test]
    fn component_key_ignores_the_choice_of_base_point() {
        let k = vec![vec![BigInt::from(1), BigInt::from(1)]];
        let a = FixedComponent::new(&k, vec![ratio(1, 3), rat(0)]);
        let b = FixedComponent::new(&k, vec![ratio(1, 2), ratio(1, 6)]);
        let c = FixedComponent::new(&k, vec![rat(0), rat(0)]);
        assert_eq!(a.key, b.key);
        assert_ne!(a.key, c.key);
    }
}
