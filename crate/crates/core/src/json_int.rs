//! JSON encoding for exact integers.
//!
//! Values inside the IEEE-754 safe range (|v| < 2^53) are written as plain
//! JSON numbers; anything larger is written as a decimal string so that no
//! consumer silently rounds it. Decoding accepts either form.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serialize, Serializer};
use std::fmt;

const SAFE_LIMIT: i64 = (1 << 53) - 1;

pub fn to_value(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) if x.abs() <= SAFE_LIMIT => serde_json::Value::from(x),
        _ => serde_json::Value::String(v.to_string()),
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) if x.abs() <= SAFE_LIMIT => s.serialize_i64(x),
        _ => s.serialize_str(&v.to_string()),
    }
}

struct BigIntVisitor;

impl<'de> Visitor<'de> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse().map_err(E::custom)
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    d.deserialize_any(BigIntVisitor)
}

/// `#[serde(with = "json_int::vec")]` for `Vec<BigInt>`.
pub mod vec {
    use super::*;
    use serde::de::SeqAccess;

    #[derive(Serialize)]
    struct Wrapped<'a>(#[serde(serialize_with = "super::serialize")] &'a BigInt);

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(Wrapped))
    }

    struct SeqVisitor;

    impl<'de> Visitor<'de> for SeqVisitor {
        type Value = Vec<BigInt>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a list of integers")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigInt>, A::Error> {
            let mut out = Vec::new();
            while let Some(Elem(v)) = seq.next_element()? {
                out.push(v);
            }
            Ok(out)
        }
    }

    struct Elem(BigInt);

    impl<'de> serde::Deserialize<'de> for Elem {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            super::deserialize(d).map(Elem)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        d.deserialize_seq(SeqVisitor)
    }
}

/// Whether a value needs the string encoding.
pub fn exceeds_safe_range(v: &BigInt) -> bool {
    v.abs() > BigInt::from(SAFE_LIMIT)
}
