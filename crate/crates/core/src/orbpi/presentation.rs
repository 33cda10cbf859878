//! Finite group presentations with words as signed generator indices.

use serde::{Deserialize, Serialize};

use super::OrbError;

/// A letter `k > 0` stands for generator `k` (1-based), `-k` for its inverse.
pub type Word = Vec<i32>;

/// Cancels adjacent inverse pairs.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn inverse(word: &[i32]) -> Word {
    word.iter().rev().map(|x| -x).collect()
}

/// `w^k` for `k ≥ 0`, freely reduced.
pub fn power(word: &[i32], k: u32) -> Word {
    free_reduce(&word.repeat(k as usize))
}

/// `a b a^-1 b^-1`.
pub fn commutator(a: &[i32], b: &[i32]) -> Word {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w.extend(inverse(a));
    w.extend(inverse(b));
    free_reduce(&w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Validates letters and freely reduces every relator, dropping the
    /// ones that become trivial.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, OrbError> {
        let p = Presentation { generators, relators: Vec::new() };
        let mut relators_out = Vec::new();
        for r in relators {
            p.check_word(&r)?;
            let r = free_reduce(&r);
            if !r.is_empty() {
                relators_out.push(r);
            }
        }
        Ok(Presentation { relators: relators_out, ..p })
    }

    /// The free group on `names`.
    pub fn free(names: &[&str]) -> Self {
        Presentation { generators: names.iter().map(|s| s.to_string()).collect(), relators: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn check_word(&self, w: &[i32]) -> Result<(), OrbError> {
        match w.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize > self.generators.len()) {
            Some(&x) => Err(OrbError::BadLetter { letter: x, generators: self.generators.len() }),
            None => Ok(()),
        }
    }

    /// Adds the relators `words`, i.e. passes to the quotient by their
    /// normal closure.
    pub fn quotient_by(&self, words: &[Word]) -> Result<Self, OrbError> {
        let mut rel = self.relators.clone();
        rel.extend(words.iter().cloned());
        Presentation::new(self.generators.clone(), rel)
    }

    /// Formats a word with generator names, e.g. `g1 g2^-1`.
    pub fn format_word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&x| {
                let name = &self.generators[x.unsigned_abs() as usize - 1];
                if x > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Adds `loop_i^{m_i}` for every `m_i ≥ 2`; loops of multiplicity one add
/// nothing.
pub fn orbifold_quotient(p: &Presentation, loops: &[Word], m: &[u32]) -> Result<Presentation, OrbError> {
    if loops.len() != m.len() {
        return Err(OrbError::LengthMismatch { loops: loops.len(), multiplicities: m.len() });
    }
    if let Some(i) = m.iter().position(|&k| k == 0) {
        return Err(OrbError::ZeroMultiplicity(i + 1));
    }
    for l in loops {
        p.check_word(l)?;
    }
    let powers: Vec<Word> = loops.iter().zip(m).filter(|(_, &k)| k >= 2).map(|(l, &k)| power(l, k)).collect();
    p.quotient_by(&powers)
}

/// Fundamental group of the complement of three concurrent lines with
/// branching orders `m`: generators `γ0..γ3` (letters 1..4), `γ0` central
/// and equal to `γ1 γ2 γ3`, and `γi^{mi} = 1`.
pub fn three_lines_group(m: [u32; 3]) -> Result<Presentation, OrbError> {
    if let Some(i) = m.iter().position(|&k| k < 2) {
        return Err(OrbError::SmallMultiplicity(i + 1));
    }
    let names = ["g0", "g1", "g2", "g3"];
    let mut rel: Vec<Word> = (2..=4).map(|i| commutator(&[1], &[i])).collect();
    rel.push(vec![1, -4, -3, -2]);
    let base = Presentation::new(names.iter().map(|s| s.to_string()).collect(), rel)?;
    orbifold_quotient(&base, &[vec![2], vec![3], vec![4]], &m)
}

/// The quotient of a three-lines group by its central generator `γ0`.
pub fn central_quotient(p: &Presentation) -> Result<Presentation, OrbError> {
    p.quotient_by(&[vec![1]])
}
