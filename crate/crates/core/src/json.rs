//! Big integers as exact JSON numbers.

use num_bigint::BigInt;
use std::str::FromStr;

pub fn number(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("decimal integer is a valid JSON number")
}

pub fn value(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(number(n))
}

pub fn parse_bigint(n: &serde_json::Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("expected an integer, got {n}"))
}
