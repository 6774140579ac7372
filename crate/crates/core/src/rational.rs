//! Exact rationals: parsing, formatting and the JSON encoding shared by every
//! file format in the crate (an integer, or a `"p/q"` string).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"`, `"-p"`, `"p/q"` (whitespace around the parts is ignored).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bad = || ParseRationalError::Invalid(s.to_string());
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Parses a comma separated list such as `1,0,-1/2`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub struct DisplayList<'a>(pub &'a [Rational]);

impl fmt::Display for DisplayList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(q))?;
        }
        f.write_str(")")
    }
}

/// Multiplies a row by the lcm of its denominators, returning integers.
pub(crate) fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| {
        num_integer::Integer::lcm(&acc, q.denom())
    });
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// serde adapter for a single rational (`#[serde(with = "rational::json")]`).
pub mod json {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        if q.is_integer() {
            if let Some(v) = q.numer().to_i64() {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }

    struct RationalVisitor;

    impl Visitor<'_> for RationalVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a \"p/q\" string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from_integer(BigInt::from(v)))
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rational, E> {
            Err(E::custom(format!(
                "floating point value {v} is not accepted; write it as \"p/q\""
            )))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(E::custom)
        }
    }
}

/// serde adapter for `Vec<Rational>`.
pub mod json_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::Deserialize;

    #[derive(Deserialize)]
    struct Item(#[serde(with = "super::json")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&Wrap(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let items = Vec::<Item>::deserialize(d)?;
        Ok(items.into_iter().map(|i| i.0).collect())
    }

    pub(crate) struct Wrap<'a>(pub &'a Rational);

    impl serde::Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            super::json::serialize(self.0, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("+5/1").unwrap(), int(5));
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(
            parse_rational("1.5"),
            Err(ParseRationalError::Invalid(_))
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("/2"),
            Err(ParseRationalError::Invalid(_))
        ));
    }

    #[test]
    fn json_accepts_numbers_and_strings_but_not_floats() {
        #[derive(serde::Deserialize)]
        struct W(#[serde(with = "json")] Rational);
        let a: W = serde_json::from_str("7").unwrap();
        let b: W = serde_json::from_str("\"-1/3\"").unwrap();
        assert_eq!(a.0, int(7));
        assert_eq!(b.0, ratio(-1, 3));
        assert!(serde_json::from_str::<W>("0.5").is_err());
    }

    #[test]
    fn clearing_denominators_keeps_proportions() {
        let row = vec![ratio(1, 2), ratio(-2, 3), int(0)];
        let ints = clear_denominators(&row);
        assert_eq!(
            ints,
            vec![BigInt::from(3), BigInt::from(-4), BigInt::from(0)]
        );
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(p in -10_000i64..10_000, q in 1i64..500) {
            let r = ratio(p, q);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
