//! Affine crystallographic groups `v ↦ L(g) v + u_g` on `R^r`, with the
//! lattice `Z^r` of pure translations.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exactla::rational::{common_denominator, frac_vec, small_to_rational_matrix, to_integer_matrix};
use crate::exactla::{hnf, inverse, Matrix};
use crate::groupcore::{GroupError, GroupMatrix, MatrixGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("linear parts do not generate a finite group within {bound} elements")]
    NotFinite { bound: usize },
    #[error("element {element} acts as the pure translation {translation:?}, which is not in the lattice")]
    KernelTooBig { element: usize, translation: Vec<BigRational> },
    #[error("cocycle condition fails for the pair ({g}, {h})")]
    CocycleViolation { g: usize, h: usize },
    #[error("pure translations do not generate a lattice within {bound} cosets")]
    NonLattice { bound: usize },
}

impl From<GroupError> for CrystalError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::ExceedsBound { bound } => CrystalError::NotFinite { bound },
            other => CrystalError::InvalidInput(other.to_string()),
        }
    }
}

/// One affine generator `v ↦ linear · v + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: GroupMatrix,
    pub translation: Vec<BigRational>,
}

impl AffineMap {
    pub fn new(linear: GroupMatrix, translation: Vec<BigRational>) -> Self {
        AffineMap { linear, translation }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let lq = small_to_rational_matrix(&self.linear);
        let t = lq.mul_vec(&other.translation).iter().zip(&self.translation).map(|(a, b)| a + b).collect();
        AffineMap { linear: &self.linear * &other.linear, translation: t }
    }

    /// Same map with the translation reduced into `[0,1)^r`.
    pub fn reduced(&self) -> AffineMap {
        AffineMap { linear: self.linear.clone(), translation: frac_vec(&self.translation) }
    }
}

/// Raw generator data for a crystallographic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystData {
    pub rank: usize,
    pub generators: Vec<AffineMap>,
}

impl CrystData {
    pub fn new(rank: usize, generators: Vec<AffineMap>) -> Self {
        CrystData { rank, generators }
    }

    fn validate(&self) -> Result<(), CrystalError> {
        if self.rank == 0 {
            return Err(CrystalError::InvalidInput("rank must be positive".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.linear.rows() != self.rank || g.linear.cols() != self.rank {
                return Err(CrystalError::InvalidInput(format!(
                    "generator {i}: linear part is {}x{}, expected {r}x{r}",
                    g.linear.rows(),
                    g.linear.cols(),
                    r = self.rank
                )));
            }
            if g.translation.len() != self.rank {
                return Err(CrystalError::InvalidInput(format!(
                    "generator {i}: translation has length {}, expected {}",
                    g.translation.len(),
                    self.rank
                )));
            }
        }
        Ok(())
    }
}

/// A validated crystallographic group: the finite linear group `G = L(Γ)`
/// and its vector system `g ↦ u_g ∈ [0,1)^r`.
#[derive(Clone, Debug)]
pub struct CrystGroup {
    linear: MatrixGroup,
    translations: Vec<Vec<BigRational>>,
}

impl CrystGroup {
    /// Builds a group from a full vector system (one vector per element of
    /// `linear`, any representatives mod `Z^r`), checking the cocycle condition.
    pub fn from_vector_system(linear: MatrixGroup, u: &[Vec<BigRational>]) -> Result<Self, CrystalError> {
        if u.len() != linear.order() || u.iter().any(|v| v.len() != linear.rank()) {
            return Err(CrystalError::InvalidInput(format!(
                "vector system needs {} vectors of length {}",
                linear.order(),
                linear.rank()
            )));
        }
        let translations: Vec<Vec<BigRational>> = u.iter().map(|v| frac_vec(v)).collect();
        if translations[0].iter().any(|x| !x.is_zero()) {
            return Err(CrystalError::KernelTooBig { element: 0, translation: translations[0].clone() });
        }
        let g = CrystGroup { linear, translations };
        g.verify_cocycle()?;
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.linear.rank()
    }

    pub fn order(&self) -> usize {
        self.linear.order()
    }

    pub fn linear(&self) -> &MatrixGroup {
        &self.linear
    }

    pub fn linear_part(&self, g: usize) -> &GroupMatrix {
        self.linear.element(g)
    }

    /// `u_g`, reduced into `[0,1)^r`.
    pub fn translation(&self, g: usize) -> &[BigRational] {
        &self.translations[g]
    }

    pub fn vector_system(&self) -> &[Vec<BigRational>] {
        &self.translations
    }

    pub fn affine(&self, g: usize) -> AffineMap {
        AffineMap::new(self.linear.element(g).clone(), self.translations[g].clone())
    }

    /// The integral defect `u_g + L(g) u_h - u_gh ∈ Z^r`.
    pub fn cocycle_defect(&self, g: usize, h: usize) -> Vec<BigRational> {
        let lq = small_to_rational_matrix(self.linear.element(g));
        let gh = self.linear.mul(g, h);
        lq.mul_vec(&self.translations[h])
            .iter()
            .zip(&self.translations[g])
            .zip(&self.translations[gh])
            .map(|((a, b), c)| a + b - c)
            .collect()
    }

    /// Checks `u_gh ≡ L(g) u_h + u_g (mod Z^r)` for all pairs.
    pub fn verify_cocycle(&self) -> Result<(), CrystalError> {
        let n = self.order();
        for g in 0..n {
            for h in 0..n {
                if !self.cocycle_defect(g, h).iter().all(BigRational::is_integer) {
                    return Err(CrystalError::CocycleViolation { g, h });
                }
            }
        }
        Ok(())
    }

    /// Generators of the linear group with their translations.
    pub fn generator_data(&self) -> CrystData {
        CrystData::new(self.rank(), self.linear.generators().iter().map(|&g| self.affine(g)).collect())
    }
}

/// Validates generator data as a crystallographic group whose lattice of
/// pure translations is exactly `Z^r`.
pub fn verify_crystallographic(data: &CrystData, bound: usize) -> Result<CrystGroup, CrystalError> {
    data.validate()?;
    let linear_gens: Vec<GroupMatrix> = data.generators.iter().map(|g| g.linear.clone()).collect();
    let linear = MatrixGroup::generate(data.rank, &linear_gens, bound)?;
    let n = linear.order();
    let gen_translations: Vec<Vec<BigRational>> = data.generators.iter().map(|g| frac_vec(&g.translation)).collect();

    let mut u: Vec<Option<Vec<BigRational>>> = vec![None; n];
    u[0] = Some(vec![BigRational::zero(); data.rank]);
    // elements are in breadth-first order, so each is reached from an earlier one
    for x in 0..n {
        let ux = u[x].clone().expect("breadth-first order assigns every element");
        let lx = small_to_rational_matrix(linear.element(x));
        for (s, &gi) in linear.generators().iter().enumerate() {
            let y = linear.mul(x, gi);
            let cand: Vec<BigRational> =
                frac_vec(&lx.mul_vec(&gen_translations[s]).iter().zip(&ux).map(|(a, b)| a + b).collect::<Vec<_>>());
            match &u[y] {
                None => u[y] = Some(cand),
                Some(existing) if *existing != cand => {
                    let diff = frac_vec(&cand.iter().zip(existing).map(|(a, b)| a - b).collect::<Vec<_>>());
                    return Err(CrystalError::KernelTooBig { element: y, translation: diff });
                }
                Some(_) => {}
            }
        }
    }
    let translations: Vec<Vec<BigRational>> = u.into_iter().map(|v| v.expect("all elements assigned")).collect();
    let g = CrystGroup { linear, translations };
    g.verify_cocycle()?;
    Ok(g)
}

/// Result of absorbing all pure translations into the lattice.
#[derive(Clone, Debug)]
pub struct NormalizedAction {
    pub group: CrystGroup,
    /// Columns are the new lattice basis in old coordinates: `v = P v'`.
    pub basis: Matrix<BigRational>,
    /// Pure translations modulo the old lattice that were adjoined, sorted.
    pub adjoined: Vec<Vec<BigRational>>,
    /// Index of the old lattice in the new one.
    pub index: usize,
}

/// Enlarges the lattice to all pure translations of the group generated by
/// `data`, rebases so the new lattice is `Z^r`, and validates the result.
pub fn normalize_action(data: &CrystData, bound: usize) -> Result<NormalizedAction, CrystalError> {
    data.validate()?;
    let r = data.rank;
    // make sure the linear parts alone are finite before enumerating cosets
    let linear_gens: Vec<GroupMatrix> = data.generators.iter().map(|g| g.linear.clone()).collect();
    let linear = MatrixGroup::generate(r, &linear_gens, bound)?;

    let gens: Vec<AffineMap> = data.generators.iter().map(AffineMap::reduced).collect();
    let identity = AffineMap::new(GroupMatrix::identity(r), vec![BigRational::zero(); r]);
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let limit = bound.saturating_mul(linear.order().max(1));
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = x.compose(s).reduced();
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(CrystalError::NonLattice { bound: limit });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut adjoined: Vec<Vec<BigRational>> = seen
        .iter()
        .filter(|m| m.linear.is_identity() && m.translation.iter().any(|x| !x.is_zero()))
        .map(|m| m.translation.clone())
        .collect();
    adjoined.sort();
    let index = adjoined.len() + 1;

    let basis = lattice_basis(r, &adjoined);
    let p_inv = inverse(&basis).expect("lattice basis is invertible");
    let generators = data
        .generators
        .iter()
        .map(|g| {
            let l = &(&p_inv * &small_to_rational_matrix(&g.linear)) * &basis;
            let linear = to_integer_matrix(&l)
                .ok_or_else(|| CrystalError::InvalidInput("linear part does not preserve the enlarged lattice".into()))?
                .map(|x| i64::try_from(x).expect("entries of a finite-order integral matrix are small"));
            Ok(AffineMap::new(linear, p_inv.mul_vec(&g.translation)))
        })
        .collect::<Result<Vec<_>, CrystalError>>()?;
    let group = verify_crystallographic(&CrystData::new(r, generators), bound)?;
    Ok(NormalizedAction { group, basis, adjoined, index })
}

/// Basis (as matrix columns) of `Z^r + Σ Z t` for rational translations `t`.
fn lattice_basis(r: usize, translations: &[Vec<BigRational>]) -> Matrix<BigRational> {
    if translations.is_empty() {
        return Matrix::identity(r);
    }
    let d = common_denominator(translations.iter().flatten());
    let dq = BigRational::from_integer(d.clone());
    let mut rows: Vec<Vec<BigInt>> =
        (0..r).map(|i| (0..r).map(|j| if i == j { d.clone() } else { BigInt::zero() }).collect()).collect();
    rows.extend(translations.iter().map(|t| t.iter().map(|x| (x * &dq).to_integer()).collect()));
    let (h, _) = hnf(&Matrix::from_rows(rows));
    let basis_rows: Vec<Vec<BigRational>> =
        (0..r).map(|i| h.row(i).iter().map(|x| BigRational::new(x.clone(), d.clone())).collect()).collect();
    debug_assert!(basis_rows.iter().all(|row| row.iter().any(|x| !x.is_zero())));
    Matrix::from_rows(basis_rows).transpose()
}

/// `|det|` of a rational basis matrix, as the covolume of the lattice it spans.
pub fn covolume(basis: &Matrix<BigRational>) -> BigRational {
    use num_traits::Signed;
    crate::exactla::determinant(basis).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> GroupMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn data(rank: usize, gens: Vec<(GroupMatrix, Vec<BigRational>)>) -> CrystData {
        CrystData::new(rank, gens.into_iter().map(|(l, t)| AffineMap::new(l, t)).collect())
    }

    #[test]
    fn minus_identity_is_valid() {
        let d = data(2, vec![(m(&[&[-1, 0], &[0, -1]]), vec![rat(0), rat(0)])]);
        let g = verify_crystallographic(&d, 512).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn glide_reflection_squares_into_lattice() {
        let d = data(2, vec![(m(&[&[1, 0], &[0, -1]]), vec![ratio(1, 2), rat(0)])]);
        let g = verify_crystallographic(&d, 512).unwrap();
        assert_eq!(g.order(), 2);
        // oracle: composing the map with itself gives translation by (1, 0)
        let sq = d.generators[0].compose(&d.generators[0]);
        assert!(sq.linear.is_identity());
        assert_eq!(sq.translation, vec![rat(1), rat(0)]);
        assert_eq!(g.cocycle_defect(1, 1), vec![rat(1), rat(0)]);
    }

    #[test]
    fn pure_translation_is_rejected_then_absorbed() {
        let d = data(2, vec![(m(&[&[1, 0], &[0, 1]]), vec![ratio(1, 2), rat(0)])]);
        assert!(matches!(verify_crystallographic(&d, 512), Err(CrystalError::KernelTooBig { .. })));
        let n = normalize_action(&d, 512).unwrap();
        assert_eq!(n.index, 2);
        assert_eq!(n.group.order(), 1);
        // oracle: new lattice Z(1/2,0) + Z(0,1)
        assert_eq!(n.basis, Matrix::from_rows(vec![vec![ratio(1, 2), rat(0)], vec![rat(0), rat(1)]]));
        assert_eq!(covolume(&n.basis), ratio(1, 2));
    }

    #[test]
    fn normalization_keeps_genuine_translation() {
        let d = data(2, vec![(m(&[&[-1, 0], &[0, -1]]), vec![ratio(1, 2), ratio(1, 2)])]);
        let n = normalize_action(&d, 512).unwrap();
        assert_eq!(n.index, 1);
        assert!(n.basis.is_identity());
        assert_eq!(n.group.translation(1), &[ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn rotation_with_translation_absorbed_in_new_basis() {
        // the square of (R, (1/2, 1/2)) with R of order 4 is a translation
        let d = data(2, vec![(m(&[&[0, -1], &[1, 0]]), vec![ratio(1, 2), rat(0)])]);
        let n = normalize_action(&d, 512).unwrap();
        assert!(n.group.verify_cocycle().is_ok());
        assert_eq!(n.group.order(), 4);
    }

    #[test]
    fn mismatched_shapes_rejected() {
        let d = data(2, vec![(m(&[&[1]]), vec![rat(0), rat(0)])]);
        assert!(matches!(verify_crystallographic(&d, 512), Err(CrystalError::InvalidInput(_))));
        let d = data(2, vec![(m(&[&[1, 0], &[0, 1]]), vec![rat(0)])]);
        assert!(matches!(verify_crystallographic(&d, 512), Err(CrystalError::InvalidInput(_))));
    }

    #[test]
    fn infinite_linear_part_is_not_finite() {
        let d = data(2, vec![(m(&[&[1, 1], &[0, 1]]), vec![rat(0), rat(0)])]);
        assert_eq!(verify_crystallographic(&d, 100).unwrap_err(), CrystalError::NotFinite { bound: 100 });
    }

    #[test]
    fn vector_system_cocycle_checked() {
        let lin = MatrixGroup::generate(2, &[m(&[&[1, 0], &[0, -1]])], 512).unwrap();
        assert!(CrystGroup::from_vector_system(lin.clone(), &[vec![rat(0), rat(0)], vec![ratio(1, 2), ratio(1, 3)]]).is_ok());
        // u_g = (1/3, 0) gives u_g + L u_g = (2/3, 0), not in Z^2
        assert!(matches!(
            CrystGroup::from_vector_system(lin, &[vec![rat(0), rat(0)], vec![ratio(1, 3), rat(0)]]),
            Err(CrystalError::CocycleViolation { .. })
        ));
    }
}
