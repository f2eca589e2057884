//! JSON views of the core types, used by the CLI and the Python bindings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Writes a big integer as a bare JSON number of any length.
pub struct Int<'a>(pub &'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => serializer.serialize_i64(n),
            None => serde_json::Number::from_str(&self.0.to_string())
                .map_err(serde::ser::Error::custom)?
                .serialize(serializer),
        }
    }
}

pub(crate) fn int<S: Serializer>(n: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    Int(n).serialize(serializer)
}

pub(crate) fn display<T: std::fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
