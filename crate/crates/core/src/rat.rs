//! Arbitrary-precision rationals and their string form.
//!
//! `BigRational` keeps every value reduced with a positive denominator, so
//! equality is structural and `0` is always `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` (surrounding whitespace allowed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// `"a/b"`, or `"a"` when the denominator is 1.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat_to_json(q: &Rat) -> Value {
    Value::String(format_rat(q))
}

/// Accepts a JSON string in rational form or a JSON integer.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(rat(i)),
            None => Err(Error::Parse(format!("non-integer JSON number {n}; use a string"))),
        },
        other => Err(Error::Parse(format!("expected rational, found {other}"))),
    }
}

pub fn vec_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_json).collect())
}

pub fn vec_from_json(v: &Value) -> Result<Vec<Rat>> {
    match v {
        Value::Array(items) => items.iter().map(rat_from_json).collect(),
        other => Err(Error::Parse(format!("expected array of rationals, found {other}"))),
    }
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Least common multiple of the denominators in `v` (1 for an empty slice).
pub fn denominator_lcm(v: &[Rat]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(format_rat(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rat(&rat(5)), "5");
        assert_eq!(format_rat(&rat(0)), "0");
        assert_eq!(parse_rat(" -3/2 ").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("4/2").unwrap(), rat(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn json_accepts_integers() {
        assert_eq!(rat_from_json(&serde_json::json!(3)).unwrap(), rat(3));
        assert_eq!(rat_from_json(&serde_json::json!("1/3")).unwrap(), ratio(1, 3));
        assert!(rat_from_json(&serde_json::json!(0.5)).is_err());
    }
}
