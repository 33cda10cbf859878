//! Exact complex character tables by the class-sum eigenvector method.
//!
//! The class multiplication coefficients are computed once; their common
//! eigenvectors over a prime field `F_p` with `p ≡ 1 (mod e)` give the
//! central characters, from which the character values mod `p` follow.
//! Each value is then lifted to `Q(ζ_e)` by recovering the multiplicity
//! of every root of unity as an eigenvalue, which is a small integer.

use std::sync::Arc;

use thiserror::Error;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::group::{class_lookup, conjugacy_classes, ConjugacyClass, MatrixGroup};
use super::modp::{prime_one_mod, PrimeField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("class algebra did not split into one-dimensional eigenspaces over F_{0}")]
    SplittingFailed(u64),
    #[error("character value could not be lifted from F_{0}")]
    LiftFailed(u64),
    #[error("orthogonality relation failed: {0}")]
    Orthogonality(String),
}

/// Root-of-unity multiplicities `[m_0, …, m_{e-1}]` encoding `Σ m_k ζ_e^k`.
pub type RootCounts = Vec<i64>;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    exponent: u32,
    prime: u64,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    square_class: Vec<usize>,
    field: Arc<CyclotomicField>,
    counts: Vec<Vec<RootCounts>>,
    values: Vec<Vec<Cyclotomic>>,
    fs: Vec<i8>,
    conjugates: Vec<usize>,
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Splits the subspace spanned by `basis` (rows in reduced echelon form)
/// into eigenspaces of `a`, which must leave it invariant.
fn split(fp: &PrimeField, a: &[Vec<u64>], basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>, CharacterError> {
    let d = basis.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| a.iter().map(|row| row.iter().zip(b).fold(0, |acc, (&x, &y)| fp.add(acc, fp.mul(x, y)))).collect())
        .collect();
    let r: Vec<Vec<u64>> = (0..d).map(|t| (0..d).map(|i| images[i][pivots[t]]).collect()).collect();
    let roots = fp.roots(&fp.charpoly(&r));
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> =
            (0..d).map(|t| (0..d).map(|i| if i == t { fp.sub(r[t][i], lambda) } else { r[t][i] }).collect()).collect();
        let coords = fp.kernel(&shifted, d);
        let mut vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut w = vec![0u64; basis[0].len()];
                for (ct, bt) in c.iter().zip(&basis) {
                    for (wi, &bi) in w.iter_mut().zip(bt) {
                        *wi = fp.add(*wi, fp.mul(*ct, bi));
                    }
                }
                w
            })
            .collect();
        fp.rref(&mut vectors);
        total += vectors.len();
        out.push(vectors);
    }
    if total != d {
        return Err(CharacterError::SplittingFailed(fp.p));
    }
    Ok(out)
}

/// Product in the group ring `Z[C_e]`, i.e. polynomials mod `x^e - 1`.
fn convolve(a: &[i64], b: &[i64], acc: &mut [i64], weight: i64) {
    let e = acc.len();
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                acc[(i + j) % e] += weight * x * y;
            }
        }
    }
}

fn conj_counts(a: &[i64]) -> Vec<i64> {
    let e = a.len();
    (0..e).map(|k| a[(e - k) % e]).collect()
}

/// Computes the full complex character table of `g`.
///
/// Characters are ordered by degree, the trivial character first; classes
/// follow [`conjugacy_classes`].
pub fn character_table(g: &MatrixGroup) -> Result<CharacterTable, CharacterError> {
    let n = g.order();
    let classes = conjugacy_classes(g);
    let k = classes.len();
    let class_of = class_lookup(n, &classes);
    let e = g.exponent() as u64;
    let p = prime_one_mod(e, 2 * isqrt(n) as u64 + 2);
    let fp = PrimeField::new(p);

    let inverse_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c.representative)]).collect();
    let square_class: Vec<usize> = classes.iter().map(|c| class_of[g.mul(c.representative, c.representative)]).collect();

    // mats[j][s][l] = #{x ∈ C_j : x^-1 z_l ∈ C_s}
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for (j, cj) in classes.iter().enumerate() {
        for (l, cl) in classes.iter().enumerate() {
            for &x in &cj.elements {
                let y = g.mul(g.inv(x), cl.representative);
                mats[j][class_of[y]][l] += 1;
            }
        }
    }

    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity];
    for mat in mats.iter().skip(1) {
        if spaces.len() == k {
            break;
        }
        let mut next = Vec::with_capacity(k);
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
            } else {
                next.extend(split(&fp, mat, basis)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(CharacterError::SplittingFailed(p));
    }

    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let max_degree = isqrt(n) as u64;
    let mut modp_chars: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        let inv0 = fp.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| fp.mul(x, inv0)).collect();
        let s = (0..k).fold(0, |acc, l| fp.add(acc, fp.mul(fp.mul(omega[l], omega[inverse_class[l]]), fp.inv(sizes[l] % p))));
        let d2 = fp.mul(n as u64 % p, fp.inv(s));
        let d = (1..=max_degree).find(|d| d * d % p == d2).ok_or(CharacterError::LiftFailed(p))?;
        let values = (0..k).map(|l| fp.mul(fp.mul(omega[l], d), fp.inv(sizes[l] % p))).collect();
        modp_chars.push((d, values));
    }
    modp_chars.sort();

    // lift each value to root-of-unity multiplicities
    let z = fp.pow(fp.primitive_root(), (p - 1) / e);
    let mut counts = Vec::with_capacity(k);
    for (d, chi) in &modp_chars {
        let mut row = Vec::with_capacity(k);
        for c in &classes {
            let x = c.representative;
            let o = g.element_order(x) as u64;
            let zo = fp.pow(z, e / o);
            let powers: Vec<u64> = (0..o).map(|t| chi[class_of[g.power(x, t as usize)]]).collect();
            let inv_o = fp.inv(o % p);
            let mut cnt = vec![0i64; e as usize];
            let mut total = 0;
            for kk in 0..o {
                let zinv = fp.inv(fp.pow(zo, kk));
                let mut acc = 0;
                for (t, &val) in powers.iter().enumerate() {
                    acc = fp.add(acc, fp.mul(val, fp.pow(zinv, t as u64)));
                }
                let m = fp.mul(acc, inv_o);
                if m > *d {
                    return Err(CharacterError::LiftFailed(p));
                }
                cnt[((e / o) * kk) as usize] = m as i64;
                total += m;
            }
            if total != *d {
                return Err(CharacterError::LiftFailed(p));
            }
            row.push(cnt);
        }
        counts.push(row);
    }

    let field = CyclotomicField::new(e as u32);
    let values = counts
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| Cyclotomic::from_root_counts(&field, &c.iter().map(|&m| m as u64).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let conjugates = (0..k)
        .map(|i| {
            (0..k)
                .find(|&j| (0..k).all(|l| counts[i][inverse_class[l]] == counts[j][l]))
                .ok_or_else(|| CharacterError::Orthogonality(format!("character {i} has no conjugate in the table")))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = CharacterTable {
        order: n,
        exponent: e as u32,
        prime: p,
        classes,
        class_of,
        inverse_class,
        square_class,
        field,
        counts,
        values,
        fs: Vec::new(),
        conjugates,
    };
    table.fs = (0..k).map(|i| table.compute_fs(i)).collect::<Result<_, _>>()?;
    table.verify_orthogonality()?;
    Ok(table)
}

impl CharacterTable {
    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Exponent `e` of the group; values live in `Q(ζ_e)`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    /// Class index of a group element.
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self, chi: usize) -> usize {
        self.counts[chi][0][0] as usize
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn values(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    /// Eigenvalue multiplicities behind `χ(class)`: entry `k` counts `ζ_e^k`.
    pub fn root_counts(&self, chi: usize, class: usize) -> &[i64] {
        &self.counts[chi][class]
    }

    /// Frobenius–Schur indicator of character `chi`.
    pub fn fs_indicator(&self, chi: usize) -> i8 {
        self.fs[chi]
    }

    /// Index of the complex-conjugate character.
    pub fn conjugate(&self, chi: usize) -> usize {
        self.conjugates[chi]
    }

    /// Reduces `Σ_l weight_l · vec_l` in `Z[C_e]` to `Q(ζ_e)` and returns
    /// it as an integer if it is rational.
    fn rational_part(&self, acc: &[i64]) -> Option<i64> {
        let reduced = self.field.reduce_integral(acc);
        if reduced[1..].iter().all(|&x| x == 0) {
            Some(reduced[0])
        } else {
            None
        }
    }

    fn compute_fs(&self, chi: usize) -> Result<i8, CharacterError> {
        let e = self.exponent as usize;
        let mut acc = vec![0i64; e];
        for (l, c) in self.classes.iter().enumerate() {
            for (a, &b) in acc.iter_mut().zip(&self.counts[chi][self.square_class[l]]) {
                *a += c.size() as i64 * b;
            }
        }
        let total = self.rational_part(&acc).ok_or_else(|| CharacterError::Orthogonality("indicator sum not rational".into()))?;
        let n = self.order as i64;
        match (total % n, total / n) {
            (0, v @ -1..=1) => Ok(v as i8),
            _ => Err(CharacterError::Orthogonality(format!("indicator sum {total} is not in {{-n, 0, n}}"))),
        }
    }

    /// `⟨f, χ⟩ = (1/|G|) Σ_g f(g) conj χ(g)` for an integer class function
    /// `f` given by its value on each class; `None` if not an integer.
    pub fn integer_inner_product(&self, chi: usize, f: &[i64]) -> Option<i64> {
        assert_eq!(f.len(), self.classes.len());
        let e = self.exponent as usize;
        let mut acc = vec![0i64; e];
        for (l, c) in self.classes.iter().enumerate() {
            for (a, b) in acc.iter_mut().zip(conj_counts(&self.counts[chi][l])) {
                *a += c.size() as i64 * f[l] * b;
            }
        }
        let total = self.rational_part(&acc)?;
        let n = self.order as i64;
        (total % n == 0).then_some(total / n)
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify_orthogonality(&self) -> Result<(), CharacterError> {
        let k = self.len();
        let e = self.exponent as usize;
        let n = self.order as i64;
        let conj: Vec<Vec<Vec<i64>>> = self.counts.iter().map(|row| row.iter().map(|c| conj_counts(c)).collect()).collect();
        for i in 0..k {
            for j in i..k {
                let mut acc = vec![0i64; e];
                for (l, c) in self.classes.iter().enumerate() {
                    convolve(&self.counts[i][l], &conj[j][l], &mut acc, c.size() as i64);
                }
                let expected = if i == j { n } else { 0 };
                if self.rational_part(&acc) != Some(expected) {
                    return Err(CharacterError::Orthogonality(format!("rows {i} and {j}")));
                }
            }
        }
        for l in 0..k {
            for m in l..k {
                let mut acc = vec![0i64; e];
                for chi in 0..k {
                    convolve(&self.counts[chi][l], &conj[chi][m], &mut acc, 1);
                }
                let expected = if l == m { n / self.classes[l].size() as i64 } else { 0 };
                if self.rational_part(&acc) != Some(expected) {
                    return Err(CharacterError::Orthogonality(format!("columns {l} and {m}")));
                }
            }
        }
        let degree_sum: usize = (0..k).map(|c| self.degree(c).pow(2)).sum();
        if degree_sum != self.order {
            return Err(CharacterError::Orthogonality(format!("sum of squared degrees is {degree_sum}")));
        }
        Ok(())
    }

    /// Class index of the inverse of the class representative.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }
}

/// Frobenius–Schur indicator `(1/|G|) Σ_g χ(g²)` of character `chi`.
pub fn fs_indicator(table: &CharacterTable, chi: usize) -> i8 {
    table.fs_indicator(chi)
}
