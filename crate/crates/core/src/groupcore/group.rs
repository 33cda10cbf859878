//! Finite subgroups of `GL(r, Z)` given by generators.

use std::collections::HashMap;

use num_integer::Integer;
use thiserror::Error;

use crate::exactla::Matrix;

/// Group elements are small integer matrices; finite subgroups of
/// `GL(r, Z)` never need more than machine integers at the sizes handled here.
pub type GroupMatrix = Matrix<i64>;

pub const DEFAULT_ORDER_BOUND: usize = 512;

/// Entries beyond this magnitude mean the closure is running away.
const ENTRY_LIMIT: i64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator {index} is {rows}x{cols}, expected {rank}x{rank}")]
    RankMismatch { index: usize, rows: usize, cols: usize, rank: usize },
    #[error("generator {index} is not invertible over the integers (det = {det})")]
    NotUnimodular { index: usize, det: i64 },
    #[error("closure exceeded {bound} elements; the group is infinite or too large")]
    ExceedsBound { bound: usize },
}

/// A finite matrix group with its full element list and multiplication table.
///
/// Element 0 is always the identity. Elements are ordered breadth-first by
/// generator word length, and lexicographically within each length.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    rank: usize,
    elements: Vec<GroupMatrix>,
    generators: Vec<usize>,
    index: HashMap<GroupMatrix, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
}

fn det_i64(m: &GroupMatrix) -> i64 {
    use num_traits::ToPrimitive;
    let q = crate::exactla::rational::small_to_rational_matrix(m);
    crate::exactla::determinant(&q).to_integer().to_i64().unwrap_or(0)
}

fn checked_mul(a: &GroupMatrix, b: &GroupMatrix) -> Option<GroupMatrix> {
    let n = a.rows();
    let mut out = Vec::with_capacity(n * b.cols());
    for i in 0..n {
        for j in 0..b.cols() {
            let mut acc: i64 = 0;
            for k in 0..a.cols() {
                acc = acc.checked_add(a[(i, k)].checked_mul(b[(k, j)])?)?;
            }
            if acc.abs() > ENTRY_LIMIT {
                return None;
            }
            out.push(acc);
        }
    }
    Some(Matrix::from_vec(n, b.cols(), out))
}

impl MatrixGroup {
    /// Closure of `generators` inside `GL(rank, Z)`.
    pub fn generate(rank: usize, generators: &[GroupMatrix], bound: usize) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if g.rows() != rank || g.cols() != rank {
                return Err(GroupError::RankMismatch { index, rows: g.rows(), cols: g.cols(), rank });
            }
            let det = det_i64(g);
            if det.abs() != 1 {
                return Err(GroupError::NotUnimodular { index, det });
            }
        }
        let identity = GroupMatrix::identity(rank);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut layer = Vec::new();
            for &f in &frontier {
                for g in generators {
                    let x = checked_mul(&elements[f], g).ok_or(GroupError::ExceedsBound { bound })?;
                    if !index.contains_key(&x) && !layer.contains(&x) {
                        layer.push(x);
                    }
                }
            }
            layer.sort();
            frontier.clear();
            for x in layer {
                if elements.len() >= bound {
                    return Err(GroupError::ExceedsBound { bound });
                }
                index.insert(x.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(x);
            }
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = &elements[i] * &elements[j];
                table[i * n + j] = index[&p] as u32;
            }
        }
        let inverses = (0..n).map(|i| (0..n).find(|&j| table[i * n + j] == 0).expect("finite group element has an inverse")).collect();
        let generators = generators.iter().map(|g| index[g]).collect();
        Ok(MatrixGroup { rank, elements, generators, index, table, inverses })
    }

    /// The trivial group in rank `rank`.
    pub fn trivial(rank: usize) -> Self {
        Self::generate(rank, &[], 1).expect("trivial group")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupMatrix {
        &self.elements[i]
    }

    /// Indices of the generators in the element list.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_matrices(&self) -> Vec<GroupMatrix> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }

    pub fn index_of(&self, m: &GroupMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `h a h^-1`
    pub fn conjugate(&self, a: usize, h: usize) -> usize {
        self.mul(self.mul(h, a), self.inv(h))
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, i| acc.lcm(&self.element_order(i)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| self.generators.iter().all(|&g| self.mul(a, g) == self.mul(g, a)))
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Sorted element indices of the normal closure of `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut conj: Vec<usize> = gens.iter().flat_map(|&g| (0..self.order()).map(move |h| (g, h))).map(|(g, h)| self.conjugate(g, h)).collect();
        conj.sort_unstable();
        conj.dedup();
        self.subgroup_generated(&conj)
    }

    /// The subgroup on the given element indices, as a group in its own right.
    pub fn subgroup(&self, members: &[usize]) -> MatrixGroup {
        let gens: Vec<GroupMatrix> = members.iter().filter(|&&i| i != 0).map(|&i| self.elements[i].clone()).collect();
        MatrixGroup::generate(self.rank, &gens, self.order().max(1)).expect("subgroup of a finite group")
    }
}

/// A conjugacy class: its elements (sorted) and the smallest one as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Partition of the group into conjugacy classes, ordered by representative.
/// The identity class comes first.
pub fn conjugacy_classes(g: &MatrixGroup) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if assigned[a] {
            continue;
        }
        let mut elems: Vec<usize> = (0..n).map(|h| g.conjugate(a, h)).collect();
        elems.sort_unstable();
        elems.dedup();
        for &e in &elems {
            assigned[e] = true;
        }
        classes.push(ConjugacyClass { representative: a, elements: elems });
    }
    classes
}

/// Map from element index to the index of its class in `classes`.
pub fn class_lookup(order: usize, classes: &[ConjugacyClass]) -> Vec<usize> {
    let mut lookup = vec![0; order];
    for (ci, c) in classes.iter().enumerate() {
        for &e in &c.elements {
            lookup[e] = ci;
        }
    }
    lookup
}
