//! Serde helpers. Every big integer is written as a decimal string and
//! read from either a string or a JSON integer.

use std::fmt::Display;
use std::marker::PhantomData;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A number that serializes as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dec<T>(pub T);

impl<T: Display> Serialize for Dec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

struct DecVisitor<T>(PhantomData<T>);

impl<'de, T: FromStr> Visitor<'de> for DecVisitor<T>
where
    T::Err: Display,
{
    type Value = Dec<T>;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
        v.trim().parse().map(Dec).map_err(|e| E::custom(format!("`{v}`: {e}")))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<Self::Value, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> Result<Self::Value, E> {
        self.visit_str(&v.to_string())
    }
}

impl<'de, T: FromStr> Deserialize<'de> for Dec<T>
where
    T::Err: Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(DecVisitor(PhantomData))
    }
}

/// `#[serde(with = "json::dec")]` for a single number.
pub mod dec {
    use super::*;

    pub fn serialize<S: Serializer, T: Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, T: FromStr>(d: D) -> Result<T, D::Error>
    where
        T::Err: Display,
    {
        Dec::<T>::deserialize(d).map(|x| x.0)
    }
}

/// `#[serde(with = "json::dec_vec")]` for `Vec<T>`.
pub mod dec_vec {
    use super::*;

    pub fn serialize<S: Serializer, T: Display>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>, T: FromStr>(d: D) -> Result<Vec<T>, D::Error>
    where
        T::Err: Display,
    {
        Vec::<Dec<T>>::deserialize(d).map(|v| v.into_iter().map(|x| x.0).collect())
    }
}

/// `#[serde(with = "json::dec_vec2")]` for `Vec<Vec<T>>`.
pub mod dec_vec2 {
    use super::*;

    pub fn serialize<S: Serializer, T: Display>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>, T: FromStr>(d: D) -> Result<Vec<Vec<T>>, D::Error>
    where
        T::Err: Display,
    {
        Vec::<Vec<Dec<T>>>::deserialize(d)
            .map(|v| v.into_iter().map(|row| row.into_iter().map(|x| x.0).collect()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder {
        #[serde(with = "dec")]
        one: BigInt,
        #[serde(with = "dec_vec2")]
        rows: Vec<Vec<BigInt>>,
    }

    #[test]
    fn accepts_numbers_and_strings() {
        let h: Holder = serde_json::from_str(r#"{"one": "123456789012345678901234567890", "rows": [[1, "-2"], []]}"#).unwrap();
        assert_eq!(h.rows[0][1], BigInt::from(-2));
        let out = serde_json::to_string(&h).unwrap();
        assert!(out.contains(r#""-2""#));
        let back: Holder = serde_json::from_str(&out).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_garbage() {
        assert!(serde_json::from_str::<Holder>(r#"{"one": "x", "rows": []}"#).is_err());
        assert!(serde_json::from_str::<Holder>(r#"{"one": 1.5, "rows": []}"#).is_err());
    }
}
