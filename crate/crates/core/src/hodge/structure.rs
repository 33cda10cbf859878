//! Construction of a `G`-invariant complex structure `J` on `Λ ⊗ R`.
//!
//! Existence is decided by [`is_even`](super::is_even) alone. Construction
//! first tries a handful of exact rational candidates; when `J` has
//! irrational entries in every lattice basis (e.g. a rotation of order 3),
//! it falls back to a rational Newton iteration for the unitary polar part
//! of `S^-1 A`, where `S` is a `G`-invariant inner product and `A` a generic
//! `G`-invariant skew form. The iteration is carried out in exact rationals
//! rounded to `2^-bits`, then averaged over `G` so that `J` commutes with the
//! group exactly; only `J² + I` carries a (certified) residual.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::evenness::is_even;
use super::HodgeError;
use crate::crystal::CrystGroup;
use crate::exactla::rational::{max_abs, rat, round_dyadic, small_to_rational_matrix, to_f64};
use crate::exactla::{determinant, inverse, kernel, Matrix};
use crate::RatMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureMode {
    Exact,
    Approximate,
}

/// A complex structure with its certified residuals.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexStructure {
    pub j: RatMatrix,
    pub mode: StructureMode,
    /// `max |(J² + I)_ij|`; zero in exact mode.
    pub square_residual: BigRational,
    /// `max_g max |(J L(g) - L(g) J)_ij|`; zero whenever `J` was averaged.
    pub commutator_residual: BigRational,
}

impl ComplexStructure {
    /// Wraps `j`, computing both residuals against `group`.
    pub fn certify(j: RatMatrix, group: &CrystGroup) -> Self {
        let r = j.rows();
        let square = &(&j * &j) + &RatMatrix::identity(r);
        let square_residual = max_abs(&square);
        let commutator_residual = group
            .linear()
            .generator_matrices()
            .iter()
            .map(|g| max_abs(&j.commutator(&small_to_rational_matrix(g))))
            .max()
            .unwrap_or_else(BigRational::zero);
        let mode = if square_residual.is_zero() && commutator_residual.is_zero() {
            StructureMode::Exact
        } else {
            StructureMode::Approximate
        };
        ComplexStructure { j, mode, square_residual, commutator_residual }
    }

    pub fn is_exact(&self) -> bool {
        self.mode == StructureMode::Exact
    }

    pub fn complex_dimension(&self) -> usize {
        self.j.rows() / 2
    }

    /// Whether both residuals are within `tolerance`.
    pub fn within(&self, tolerance: &BigRational) -> bool {
        &self.square_residual <= tolerance && &self.commutator_residual <= tolerance
    }

    /// Rounds a numerical structure that (nearly) commutes with `group` to a
    /// certified rational one: a few exact Newton steps at `bits` precision,
    /// followed by averaging over the group.
    pub fn from_numeric(j: &Matrix<f64>, group: &CrystGroup, bits: u32) -> Result<Self, HodgeError> {
        let start = j.map(|&x| {
            BigRational::from_float(x).map(|q| round_dyadic(&q, bits)).unwrap_or_else(BigRational::zero)
        });
        let polished = newton_polish(start, bits)?;
        Ok(Self::certify(average(&polished, group), group))
    }
}

#[derive(Clone, Debug)]
pub struct StructureOptions {
    pub seed: u64,
    /// Working precision of the approximate path, in bits.
    pub precision: u32,
    /// Acceptance bound for `J² + I` in approximate mode.
    pub tolerance: BigRational,
    /// Attempts at drawing a nondegenerate invariant skew form.
    pub retries: usize,
}

impl Default for StructureOptions {
    fn default() -> Self {
        StructureOptions { seed: 0, precision: 128, tolerance: default_tolerance(), retries: 8 }
    }
}

/// `10^-30`.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 30))
}

#[derive(Clone, Debug, PartialEq)]
pub enum StructureOutcome {
    Found(ComplexStructure),
    /// No invariant structure exists; lists the obstructing classes.
    NotEven { witnesses: Vec<String>, odd_rank: bool },
}

pub fn invariant_complex_structure(group: &CrystGroup, opts: &StructureOptions) -> Result<StructureOutcome, HodgeError> {
    let report = is_even(group)?;
    if !report.even {
        return Ok(StructureOutcome::NotEven { witnesses: report.witnesses, odd_rank: !report.even_rank });
    }
    if let Some(j) = search_exact(group) {
        return Ok(StructureOutcome::Found(ComplexStructure::certify(j, group)));
    }
    approximate_structure(group, opts).map(StructureOutcome::Found)
}

fn generators_q(group: &CrystGroup) -> Vec<RatMatrix> {
    group.linear().generator_matrices().iter().map(small_to_rational_matrix).collect()
}

fn is_structure(j: &RatMatrix, gens: &[RatMatrix]) -> bool {
    let r = j.rows();
    (j * j) == RatMatrix::identity(r).scale(&rat(-1)) && gens.iter().all(|g| (j * g) == (g * j))
}

/// The block structure `e_{2k} ↦ e_{2k+1} ↦ -e_{2k}`.
pub fn standard_structure(r: usize) -> RatMatrix {
    let mut j = RatMatrix::zeros(r, r);
    for k in 0..r / 2 {
        j[(2 * k + 1, 2 * k)] = rat(1);
        j[(2 * k, 2 * k + 1)] = rat(-1);
    }
    j
}

/// Signed coordinate pairings `e_i ↦ s e_j ↦ -e_i`, for small rank.
fn matching_structures(r: usize) -> Vec<RatMatrix> {
    fn rec(r: usize, used: &mut Vec<bool>, cur: &mut RatMatrix, out: &mut Vec<RatMatrix>) {
        let Some(i) = used.iter().position(|&u| !u) else {
            out.push(cur.clone());
            return;
        };
        used[i] = true;
        for j in i + 1..r {
            if used[j] {
                continue;
            }
            used[j] = true;
            for s in [1i64, -1] {
                cur[(j, i)] = rat(s);
                cur[(i, j)] = rat(-s);
                rec(r, used, cur, out);
                cur[(j, i)] = rat(0);
                cur[(i, j)] = rat(0);
            }
            used[j] = false;
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    if r <= 8 && r.is_multiple_of(2) {
        rec(r, &mut vec![false; r], &mut RatMatrix::zeros(r, r), &mut out);
    }
    out
}

/// `Σ_g L(g)^T L(g)`, a positive definite invariant form.
fn invariant_inner_product(group: &CrystGroup) -> RatMatrix {
    let r = group.rank();
    group.linear().elements().iter().fold(RatMatrix::zeros(r, r), |acc, g| {
        let gq = small_to_rational_matrix(g);
        &acc + &(&gq.transpose() * &gq)
    })
}

/// Basis of the skew forms `A` with `L(g)^T A L(g) = A` for all `g`.
pub fn invariant_skew_forms(group: &CrystGroup) -> Vec<RatMatrix> {
    let r = group.rank();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
    let basis_form = |k: usize| {
        let (i, j) = pairs[k];
        let mut a = RatMatrix::zeros(r, r);
        a[(i, j)] = rat(1);
        a[(j, i)] = rat(-1);
        a
    };
    let gens = generators_q(group);
    if gens.is_empty() {
        return (0..pairs.len()).map(basis_form).collect();
    }
    // one linear equation per (generator, entry i<j) of g^T A g - A
    let mut rows = Vec::new();
    for g in &gens {
        let images: Vec<RatMatrix> = (0..pairs.len()).map(|k| &(&g.transpose() * &basis_form(k)) * g).collect();
        for &(i, j) in &pairs {
            rows.push(
                (0..pairs.len())
                    .map(|k| {
                        let delta = if pairs[k] == (i, j) { rat(1) } else { rat(0) };
                        &images[k][(i, j)] - delta
                    })
                    .collect(),
            );
        }
    }
    kernel(&Matrix::from_rows(rows))
        .into_iter()
        .map(|coeffs| {
            coeffs.iter().enumerate().fold(RatMatrix::zeros(r, r), |acc, (k, c)| &acc + &basis_form(k).scale(c))
        })
        .collect()
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Exact rational candidates, in a fixed order; `None` if none applies.
pub fn search_exact(group: &CrystGroup) -> Option<RatMatrix> {
    let r = group.rank();
    if !r.is_multiple_of(2) {
        return None;
    }
    let gens = generators_q(group);
    let std = standard_structure(r);
    if is_structure(&std, &gens) {
        return Some(std);
    }
    for g in group.linear().elements() {
        let gq = small_to_rational_matrix(g);
        if is_structure(&gq, &gens) {
            return Some(gq);
        }
    }
    if let Some(j) = matching_structures(r).into_iter().find(|j| is_structure(j, &gens)) {
        return Some(j);
    }
    let s_inv = inverse(&invariant_inner_product(group))?;
    for a in invariant_skew_forms(group) {
        let k = &s_inv * &a;
        let k2 = &k * &k;
        let lambda = -k2[(0, 0)].clone();
        if k2 == RatMatrix::identity(r).scale(&-lambda.clone()) {
            if let Some(c) = rational_sqrt(&lambda).filter(|c| !c.is_zero()) {
                let j = k.scale(&(BigRational::one() / c));
                if is_structure(&j, &gens) {
                    return Some(j);
                }
            }
        }
    }
    None
}

/// `(1/|G|) Σ_g L(g) J L(g)^-1`.
fn average(j: &RatMatrix, group: &CrystGroup) -> RatMatrix {
    let g = group.linear();
    let r = j.rows();
    let sum = (0..g.order()).fold(RatMatrix::zeros(r, r), |acc, i| {
        let a = small_to_rational_matrix(g.element(i));
        let a_inv = small_to_rational_matrix(g.element(g.inv(i)));
        &acc + &(&(&a * j) * &a_inv)
    });
    sum.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())))
}

/// Newton iteration `J ← (J - J^-1)/2` with rounding to `2^-bits`, which
/// converges to the complex structure in the polar decomposition of `J`.
fn newton_polish(mut j: RatMatrix, bits: u32) -> Result<RatMatrix, HodgeError> {
    let r = j.rows();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let target = BigRational::new(BigInt::one(), BigInt::one() << (bits.saturating_sub(8)) as usize);
    for _ in 0..200 {
        let residual = max_abs(&(&(&j * &j) + &RatMatrix::identity(r)));
        if residual <= target {
            return Ok(j);
        }
        let j_inv = inverse(&j).ok_or(HodgeError::NumericalFailure { residual: f64::INFINITY })?;
        j = (&j - &j_inv).scale(&half).map(|x| round_dyadic(x, bits));
    }
    let residual = max_abs(&(&(&j * &j) + &RatMatrix::identity(r)));
    Err(HodgeError::NumericalFailure { residual: to_f64(&residual) })
}

/// Approximate path; see the module documentation.
pub fn approximate_structure(group: &CrystGroup, opts: &StructureOptions) -> Result<ComplexStructure, HodgeError> {
    let r = group.rank();
    let forms = invariant_skew_forms(group);
    if forms.is_empty() {
        return Err(HodgeError::NumericalFailure { residual: f64::INFINITY });
    }
    let s_inv = inverse(&invariant_inner_product(group)).expect("inner product is positive definite");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best = f64::INFINITY;
    for _ in 0..opts.retries.max(1) {
        let a = forms.iter().fold(RatMatrix::zeros(r, r), |acc, f| &acc + &f.scale(&rat(rng.gen_range(-3..=3))));
        if determinant(&a).is_zero() {
            continue;
        }
        let k = &s_inv * &a;
        // rescale so the eigenvalues ±iμ have |μ| near 1
        let scale = to_f64(&determinant(&k)).abs().powf(1.0 / r as f64);
        let k = match BigRational::from_float(scale).map(|s| round_dyadic(&s, 32)).filter(|s| !s.is_zero()) {
            Some(s) => k.scale(&s.recip()),
            None => k,
        };
        let j = newton_polish(k.map(|x| round_dyadic(x, opts.precision)), opts.precision)?;
        let cs = ComplexStructure::certify(average(&j, group), group);
        if cs.within(&opts.tolerance) {
            return Ok(cs);
        }
        best = best.min(to_f64(&cs.square_residual));
    }
    Err(HodgeError::NumericalFailure { residual: best })
}
