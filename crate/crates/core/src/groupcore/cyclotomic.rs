//! Exact arithmetic in the cyclotomic field `Q(ζ_e)`, elements stored as
//! coordinate vectors in the power basis `1, ζ, …, ζ^(φ(e)-1)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactla::rational::format_rational;

/// Coefficients (low degree first) of the cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_poly_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    debug_assert_eq!(lead, 1);
    let mut quot = vec![0i64; rem.len() + 1 - dl];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        Arc::new(CyclotomicField { order, modulus: cyclotomic_polynomial(order) })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces an integral polynomial in `ζ` (low degree first) to the
    /// power basis, exactly.
    pub fn reduce_integral(&self, poly: &[i64]) -> Vec<i64> {
        let deg = self.degree();
        let mut poly = poly.to_vec();
        while poly.len() > deg {
            let top = poly.pop().unwrap();
            if top == 0 {
                continue;
            }
            let shift = poly.len() - deg;
            for (j, &mj) in self.modulus[..deg].iter().enumerate() {
                poly[shift + j] -= top * mj;
            }
        }
        poly.resize(deg, 0);
        poly
    }
}

/// An element of `Q(ζ_e)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

fn reduce(field: &CyclotomicField, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let deg = field.degree();
    while poly.len() > deg {
        let top = poly.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = poly.len() - deg;
        for (j, &mj) in field.modulus[..deg].iter().enumerate() {
            if mj != 0 {
                poly[shift + j] -= &top * BigRational::from_integer(BigInt::from(mj));
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut c = Self::zero(field);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ^k`.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let e = field.order as i64;
        let k = k.rem_euclid(e) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Cyclotomic { field: field.clone(), coeffs: reduce(field, poly) }
    }

    /// `Σ_k counts[k] ζ^k`.
    pub fn from_root_counts(field: &Arc<CyclotomicField>, counts: &[u64]) -> Self {
        let poly = counts.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        Cyclotomic { field: field.clone(), coeffs: reduce(field, poly) }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field.order, other.field.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field.order, other.field.order);
        let n = self.coeffs.len();
        let mut poly = vec![BigRational::zero(); 2 * n.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Cyclotomic { field: self.field.clone(), coeffs: reduce(&self.field, poly) }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation, `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> Self {
        let e = self.field.order as usize;
        let mut poly = vec![BigRational::zero(); e.max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(e - k) % e] += c;
        }
        Cyclotomic { field: self.field.clone(), coeffs: reduce(&self.field, poly) }
    }

    /// Numerical value under `ζ ↦ exp(2πi/e)`.
    pub fn to_complex(&self) -> Complex64 {
        let e = self.field.order as f64;
        self.coeffs.iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (k, c)| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / e;
            acc + Complex64::from_polar(1.0, theta) * crate::exactla::rational::to_f64(c)
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            terms.push(match k {
                0 => cs,
                _ if c.is_one() => format!("z{}^{k}", self.field.order),
                _ => format!("{cs}*z{}^{k}", self.field.order),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [2u32, 3, 4, 6, 8, 12] {
            let f = CyclotomicField::new(e);
            let sum = (0..e as i64).fold(Cyclotomic::zero(&f), |acc, k| acc.add(&Cyclotomic::zeta_power(&f, k)));
            assert!(sum.is_zero(), "e = {e}");
        }
    }

    #[test]
    fn conjugation_inverts_zeta() {
        let f = CyclotomicField::new(12);
        for k in 0..12 {
            let z = Cyclotomic::zeta_power(&f, k);
            assert_eq!(z.mul(&z.conj()), Cyclotomic::from_int(&f, 1));
            assert_eq!(z.conj(), Cyclotomic::zeta_power(&f, -k));
        }
    }

    #[test]
    fn complex_embedding_matches_exact_value() {
        let f = CyclotomicField::new(4);
        let i = Cyclotomic::zeta_power(&f, 1);
        let v = i.mul(&i).to_complex();
        assert!((v.re + 1.0).abs() < 1e-12 && v.im.abs() < 1e-12);
    }
}
