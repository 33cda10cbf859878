//! Small helpers around `BigRational` used throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

pub fn frac_vec(v: &[BigRational]) -> Vec<BigRational> {
    v.iter().map(frac).collect()
}

pub fn is_integral_vec(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Least common multiple of all denominators (1 for an empty slice).
pub fn common_denominator<'a, I: IntoIterator<Item = &'a BigRational>>(xs: I) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn to_rational_matrix(m: &Matrix<BigInt>) -> Matrix<BigRational> {
    m.map(|x| BigRational::from_integer(x.clone()))
}

pub fn small_to_rational_matrix(m: &Matrix<i64>) -> Matrix<BigRational> {
    m.map(|&x| rat(x))
}

pub fn small_to_int_matrix(m: &Matrix<i64>) -> Matrix<BigInt> {
    m.map(|&x| BigInt::from(x))
}

/// Converts a rational matrix with integral entries back to integers.
pub fn to_integer_matrix(m: &Matrix<BigRational>) -> Option<Matrix<BigInt>> {
    if m.data().iter().all(BigRational::is_integer) {
        Some(m.map(|x| x.to_integer()))
    } else {
        None
    }
}

/// Formats as `p` or `p/q`.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, dec)) = s.split_once('.') {
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), dec.len());
        let frac_part: BigInt = dec.parse().ok()?;
        let mag = BigRational::new(int_part * &scale + frac_part, scale);
        return Some(if negative { -mag } else { mag });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Decimal expansion with `digits` fractional digits, truncated toward zero.
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone())).round().to_integer();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
}

/// Rounds to the nearest multiple of `2^-bits`.
pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = (x * BigRational::from_integer(scale.clone())).round();
    scaled / BigRational::from_integer(scale)
}

/// Max-norm of a rational matrix.
pub fn max_abs(m: &Matrix<BigRational>) -> BigRational {
    m.data().iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_reduces_into_unit_interval() {
        assert_eq!(frac(&ratio(-1, 3)), ratio(2, 3));
        assert_eq!(frac(&ratio(7, 2)), ratio(1, 2));
        assert_eq!(frac(&rat(-4)), rat(0));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-2"), Some(rat(-2)));
        assert_eq!(parse_rational("-0.25"), Some(ratio(-1, 4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_decimal(&ratio(-1, 3), 4), "-0.3333");
        assert_eq!(format_decimal(&ratio(5, 2), 0), "3");
    }

    #[test]
    fn dyadic_rounding() {
        assert_eq!(round_dyadic(&ratio(1, 3), 2), ratio(1, 4));
        assert_eq!(round_dyadic(&ratio(3, 8), 3), ratio(3, 8));
    }
}
