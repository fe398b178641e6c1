//! Exact integers in JSON: a number when it fits in `i64`, else a string.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serializer;

pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Integers as [`bigint`], other rationals as `"p/q"`.
pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    if v.is_integer() {
        bigint(&v.to_integer(), s)
    } else {
        s.serialize_str(&v.to_string())
    }
}

pub fn to_value(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}
