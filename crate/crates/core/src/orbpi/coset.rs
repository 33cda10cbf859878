//! Todd–Coxeter coset enumeration (HLT strategy) over the trivial subgroup.
//!
//! Enumeration only semi-decides finiteness: when more than `bound` cosets
//! have been defined the answer is [`Enumeration::Unknown`], never
//! "infinite".

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "order")]
pub enum Enumeration {
    Finite(usize),
    Unknown,
}

impl Enumeration {
    pub fn order(&self) -> Option<usize> {
        match self {
            Enumeration::Finite(n) => Some(*n),
            Enumeration::Unknown => None,
        }
    }
}

struct Exhausted;

struct Table {
    /// `rows[c][x]`: image of coset `c` under column `x`; column `2k` is
    /// generator `k`, column `2k + 1` its inverse.
    rows: Vec<Vec<Option<usize>>>,
    /// Union-find parent; a coset is live iff it is its own parent.
    parent: Vec<usize>,
    queue: Vec<usize>,
    bound: usize,
}

fn column(letter: i32) -> usize {
    let k = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * k
    } else {
        2 * k + 1
    }
}

impl Table {
    fn new(columns: usize, bound: usize) -> Self {
        Table { rows: vec![vec![None; columns]], parent: vec![0], queue: Vec::new(), bound }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Exhausted> {
        if self.rows.len() >= self.bound {
            return Err(Exhausted);
        }
        let d = self.rows.len();
        let columns = self.rows[0].len();
        self.rows.push(vec![None; columns]);
        self.parent.push(d);
        self.rows[c][x] = Some(d);
        self.rows[d][x ^ 1] = Some(c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut c = c;
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.rows[g].len() {
                let Some(d) = self.rows[g][x] else { continue };
                self.rows[d][x ^ 1] = None;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if let Some(t) = self.rows[mu][x] {
                    self.merge(nu, t);
                } else if let Some(t) = self.rows[nu][x ^ 1] {
                    self.merge(mu, t);
                } else {
                    self.rows[mu][x] = Some(nu);
                    self.rows[nu][x ^ 1] = Some(mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), Exhausted> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, word.len() - 1);
        loop {
            while i <= j {
                match self.rows[f][word[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.rows[b][word[j] ^ 1] {
                    Some(n) => {
                        b = n;
                        if j == 0 {
                            // the whole word was traced backwards
                            self.coincidence(f, b);
                            return Ok(());
                        }
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.rows[f][word[i]] = Some(b);
                self.rows[b][word[i] ^ 1] = Some(f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Order of the group, if enumeration closes with at most `bound` cosets
/// ever defined.
pub fn coset_enumerate(p: &Presentation, bound: usize) -> Enumeration {
    if bound == 0 {
        return Enumeration::Unknown;
    }
    let columns = 2 * p.rank();
    if columns == 0 {
        return Enumeration::Finite(1);
    }
    let relators: Vec<Vec<usize>> = p.relators.iter().map(|r| r.iter().map(|&x| column(x)).collect()).collect();
    let mut t = Table::new(columns, bound);
    let mut c = 0;
    let run = (|| -> Result<(), Exhausted> {
        while c < t.rows.len() {
            if t.live(c) {
                for r in &relators {
                    t.scan_and_fill(c, r)?;
                    if !t.live(c) {
                        break;
                    }
                }
                if t.live(c) {
                    for x in 0..columns {
                        if t.rows[c][x].is_none() {
                            t.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    })();
    match run {
        Ok(()) => Enumeration::Finite((0..t.rows.len()).filter(|&c| t.live(c)).count()),
        Err(Exhausted) => Enumeration::Unknown,
    }
}
