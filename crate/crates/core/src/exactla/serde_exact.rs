//! Serde adapters writing exact numbers as strings (`"p/q"` for rationals,
//! decimal digits for integers), for use with `#[serde(with = "...")]`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational};

fn rational_from<E: Error>(s: &str) -> Result<BigRational, E> {
    parse_rational(s).ok_or_else(|| E::custom(format!("invalid rational {s:?}")))
}

fn int_from<E: Error>(s: &str) -> Result<BigInt, E> {
    BigInt::from_str(s.trim()).map_err(|_| E::custom(format!("invalid integer {s:?}")))
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        rational_from(&String::deserialize(d)?)
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|x| rational_from(x)).collect()
    }
}

pub mod rational_vecs {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigRational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?.iter().map(|r| r.iter().map(|x| rational_from(x)).collect()).collect()
    }
}

pub mod int_vecs {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?.iter().map(|r| r.iter().map(|x| int_from(x)).collect()).collect()
    }
}

/// Complex matrices as rows of `["re", "im"]` pairs.
pub mod gaussian_rows {
    use num_complex::Complex;

    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Complex<BigRational>>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|r| r.iter().map(|z| [format_rational(&z.re), format_rational(&z.im)]).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Complex<BigRational>>>, D::Error> {
        Vec::<Vec<[String; 2]>>::deserialize(d)?
            .iter()
            .map(|r| r.iter().map(|[re, im]| Ok(Complex::new(rational_from(re)?, rational_from(im)?))).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::ratio;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Sample {
        #[serde(with = "rational")]
        x: BigRational,
        #[serde(with = "rational_vecs")]
        rows: Vec<Vec<BigRational>>,
        #[serde(with = "int_vecs")]
        lattice: Vec<Vec<BigInt>>,
    }

    #[test]
    fn round_trip() {
        let s = Sample {
            x: ratio(-3, 4),
            rows: vec![vec![ratio(1, 2), ratio(2, 1)]],
            lattice: vec![vec![BigInt::from(-1), BigInt::from(7)]],
        };
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"x":"-3/4","rows":[["1/2","2"]],"lattice":[["-1","7"]]}"#);
        assert_eq!(serde_json::from_str::<Sample>(&text).unwrap(), s);
        assert!(serde_json::from_str::<Sample>(r#"{"x":"1/0","rows":[],"lattice":[]}"#).is_err());
    }
}
