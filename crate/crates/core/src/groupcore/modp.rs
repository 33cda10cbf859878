//! Arithmetic and dense linear algebra over a prime field `F_p`, `p < 2^31`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p) && p < (1 << 31));
        PrimeField { p }
    }

    pub fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_p");
        self.pow(a, self.p - 2)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let n = self.p - 1;
        let factors = prime_factors(n);
        (2..self.p).find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1)).unwrap_or(1)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let v = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of the right kernel of `m` (`rows x cols`).
    pub fn kernel(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a = m.to_vec();
        let pivots = self.rref(&mut a);
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, a[row][f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - m)`, low degree first.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        // reduce to upper Hessenberg form by similarity transforms
        for k in 1..n.saturating_sub(1) {
            let Some(i) = (k..n).find(|&i| h[i][k - 1] != 0) else {
                continue;
            };
            if i != k {
                h.swap(i, k);
                for row in h.iter_mut() {
                    row.swap(i, k);
                }
            }
            let t_inv = self.inv(h[k][k - 1]);
            for j in k + 1..n {
                let u = self.mul(h[j][k - 1], t_inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = self.mul(u, h[k][c]);
                    h[j][c] = self.sub(h[j][c], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(u, row[j]);
                    row[k] = self.add(row[k], v);
                }
            }
        }
        // Hessenberg recurrence
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m1 in 1..=n {
            let prev = &polys[m1 - 1];
            let mut pm = vec![0u64; m1 + 1];
            let hmm = h[m1 - 1][m1 - 1];
            for (d, &c) in prev.iter().enumerate() {
                pm[d + 1] = self.add(pm[d + 1], c);
                pm[d] = self.sub(pm[d], self.mul(hmm, c));
            }
            let mut t = 1u64;
            for i in 1..m1 {
                t = self.mul(t, h[m1 - i][m1 - i - 1]);
                let coef = self.mul(t, h[m1 - i - 1][m1 - 1]);
                for (d, &c) in polys[m1 - i - 1].iter().enumerate() {
                    pm[d] = self.sub(pm[d], self.mul(coef, c));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p`, by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`.
pub fn prime_one_mod(e: u64, lower: u64) -> u64 {
    let mut p = (lower / e) * e + 1;
    if p <= lower {
        p += e;
    }
    while !is_prime(p) {
        p += e;
    }
    p
}
