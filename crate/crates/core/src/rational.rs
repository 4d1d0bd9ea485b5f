//! Exact rational helpers and the `"p/q"` string form used in every JSON
//! document this crate reads or writes.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{invalid, Result};

pub type Rational = BigRational;

/// `numer / denom` as an exact rational. Panics if `denom == 0`.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Always `p/q`, including integers (`3/1`), so the format is uniform.
pub fn to_pq(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts `p/q` or a bare integer `p`, with optional surrounding whitespace.
pub fn parse_pq(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| invalid(format!("bad rational {text:?}")))?;
    let denom = BigInt::from_str(denom).map_err(|_| invalid(format!("bad rational {text:?}")))?;
    if denom.is_zero() {
        return Err(invalid(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Largest integer `k` with `k <= value`.
pub fn floor_to_u64(value: &Rational) -> u64 {
    let floor = value.floor().to_integer();
    if floor.is_negative() {
        0
    } else {
        u64::try_from(floor).unwrap_or(u64::MAX)
    }
}

pub fn is_positive(value: &Rational) -> bool {
    value > &Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `serde(with = "pq")` adapter for a single rational.
pub mod pq {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_pq(&text).map_err(serde::de::Error::custom)
    }
}

/// `serde(with = "pq_seq")` adapter for a sequence of rationals.
pub mod pq_seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&to_pq(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts.iter().map(|t| parse_pq(t).map_err(serde::de::Error::custom)).collect()
    }
}
