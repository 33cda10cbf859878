//! Hermite and Smith normal forms over a Euclidean integer type.

use num_integer::Integer;
use num_traits::Signed;

use super::matrix::Matrix;

/// Integer scalars usable by the normal-form routines.
pub trait EuclideanInt: Integer + Signed + Clone + std::fmt::Debug {}

impl<T: Integer + Signed + Clone + std::fmt::Debug> EuclideanInt for T {}

/// Result of [`snf`]: `u * a * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: EuclideanInt> SmithDecomposition<T> {
    /// The diagonal entries `d_1 | d_2 | ...`, including trailing zeros up to
    /// `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn row_axpy<T: EuclideanInt>(m: &mut Matrix<T>, target: usize, source: usize, factor: &T) {
    if factor.is_zero() {
        return;
    }
    for c in 0..m.cols() {
        let v = m[(source, c)].clone() * factor.clone();
        m[(target, c)] = m[(target, c)].clone() + v;
    }
}

fn col_axpy<T: EuclideanInt>(m: &mut Matrix<T>, target: usize, source: usize, factor: &T) {
    if factor.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        let v = m[(r, source)].clone() * factor.clone();
        m[(r, target)] = m[(r, target)].clone() + v;
    }
}

fn negate_row<T: EuclideanInt>(m: &mut Matrix<T>, r: usize) {
    for c in 0..m.cols() {
        m[(r, c)] = -m[(r, c)].clone();
    }
}

/// Replaces rows `(a, b)` by `(x*a + y*b, -q*a + p*b)`, a unimodular 2x2 step.
fn row_combine<T: EuclideanInt>(m: &mut Matrix<T>, a: usize, b: usize, x: &T, y: &T, p: &T, q: &T) {
    for c in 0..m.cols() {
        let ra = m[(a, c)].clone();
        let rb = m[(b, c)].clone();
        m[(a, c)] = x.clone() * ra.clone() + y.clone() * rb.clone();
        m[(b, c)] = p.clone() * rb - q.clone() * ra;
    }
}

/// Row Hermite normal form: returns `(h, u)` with `u` unimodular and
/// `u * a == h`. Pivots are positive and the entries above each pivot lie in
/// `[0, pivot)`. Zero rows are collected at the bottom.
pub fn hnf<T: EuclideanInt>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let m = a.rows();
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut row = 0;
    for col in 0..a.cols() {
        if row == m {
            break;
        }
        for i in row + 1..m {
            if h[(i, col)].is_zero() {
                continue;
            }
            if h[(row, col)].is_zero() {
                h.swap_rows(row, i);
                u.swap_rows(row, i);
                continue;
            }
            let pa = h[(row, col)].clone();
            let pb = h[(i, col)].clone();
            let eg = pa.extended_gcd(&pb);
            let p = pa / eg.gcd.clone();
            let q = pb / eg.gcd.clone();
            row_combine(&mut h, row, i, &eg.x, &eg.y, &p, &q);
            row_combine(&mut u, row, i, &eg.x, &eg.y, &p, &q);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            negate_row(&mut h, row);
            negate_row(&mut u, row);
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let f = h[(i, col)].div_floor(&pivot);
            let nf = -f;
            row_axpy(&mut h, i, row, &nf);
            row_axpy(&mut u, i, row, &nf);
        }
        row += 1;
    }
    (h, u)
}

/// Smith normal form with transforms: `u * a * v == d`, `u` and `v`
/// unimodular, `d` diagonal with nonnegative entries `d_1 | d_2 | ...`.
pub fn snf<T: EuclideanInt>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pr, pc)) = min_abs_position(&d, t..m, t..n) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            let pivot = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let nf = -d[(i, t)].div_floor(&pivot);
                row_axpy(&mut d, i, t, &nf);
                row_axpy(&mut u, i, t, &nf);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let nf = -d[(t, j)].div_floor(&pivot);
                col_axpy(&mut d, j, t, &nf);
                col_axpy(&mut v, j, t, &nf);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                // a remainder is smaller than the pivot; move it into place
                let (pr, pc) = min_abs_cross(&d, t);
                d.swap_rows(t, pr);
                u.swap_rows(t, pr);
                d.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            // row and column t are clear; enforce divisibility of the rest
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = T::one();
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    SmithDecomposition { d, u, v }
}

fn min_abs_position<T: EuclideanInt>(
    d: &Matrix<T>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= d[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Position of the smallest nonzero entry in row `t` or column `t`.
fn min_abs_cross<T: EuclideanInt>(d: &Matrix<T>, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut consider = |i: usize, j: usize| {
        let cur = &d[best];
        if !d[(i, j)].is_zero() && (cur.is_zero() || d[(i, j)].abs() < cur.abs()) {
            best = (i, j);
        }
    };
    for i in t..d.rows() {
        consider(i, t);
    }
    for j in t..d.cols() {
        consider(t, j);
    }
    best
}

/// `|det a|` for a square integer matrix: the product of its invariant factors.
pub fn abs_det<T: EuclideanInt>(a: &Matrix<T>) -> T {
    assert!(a.is_square());
    snf(a).diagonal().into_iter().fold(T::one(), |acc, x| acc * x)
}
