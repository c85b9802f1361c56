//! Serde adapters for integers stored as decimal strings, which keeps group
//! orders beyond 64 bits lossless. Plain JSON numbers are accepted on input.

use std::fmt::Display;
use std::str::FromStr;

use serde::{de::Error, Deserialize, Deserializer, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Text(String),
    Number(u64),
}

pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
where
    T: FromStr,
    T::Err: Display,
    D: Deserializer<'de>,
{
    match Raw::deserialize(d)? {
        Raw::Text(s) => s.trim().parse().map_err(D::Error::custom),
        Raw::Number(n) => n.to_string().parse().map_err(D::Error::custom),
    }
}
