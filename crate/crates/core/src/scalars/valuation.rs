//! Exact valuations, normalized by `v(pi) = v(p) = 1`. Absolute-value
//! comparisons throughout the crate are encoded as valuations:
//! `|x| <= |y|` iff `v(x) >= v(y)`.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational valuation or `+infinity` (the valuation of 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Val {
    Finite(Rational64),
    Infinite,
}

impl Serialize for Val {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Val::Infinite => s.serialize_str("inf"),
            Val::Finite(v) => {
                if v.denom().is_one() {
                    s.serialize_str(&v.numer().to_string())
                } else {
                    s.serialize_str(&format!("{}/{}", v.numer(), v.denom()))
                }
            }
        }
    }
}

impl<'de> Deserialize<'de> for Val {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Val, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(Val::Infinite);
        }
        let (n, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s.as_str(), "1"),
        };
        let n: i64 = n.trim().parse().map_err(D::Error::custom)?;
        let den: i64 = den.trim().parse().map_err(D::Error::custom)?;
        if den == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Val::Finite(Rational64::new(n, den)))
    }
}

impl Val {
    pub fn int(v: i64) -> Val {
        Val::Finite(Rational64::from_integer(v))
    }

    pub fn frac(num: i64, den: i64) -> Val {
        Val::Finite(Rational64::new(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Val::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational64> {
        match self {
            Val::Finite(v) => Some(*v),
            Val::Infinite => None,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Val) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Val) -> Ordering {
        match (self, other) {
            (Val::Infinite, Val::Infinite) => Ordering::Equal,
            (Val::Infinite, Val::Finite(_)) => Ordering::Greater,
            (Val::Finite(_), Val::Infinite) => Ordering::Less,
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Val {
    type Output = Val;
    fn add(self, rhs: Val) -> Val {
        match (self, rhs) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinite,
        }
    }
}

impl std::ops::Add<Rational64> for Val {
    type Output = Val;
    fn add(self, rhs: Rational64) -> Val {
        match self {
            Val::Finite(a) => Val::Finite(a + rhs),
            Val::Infinite => Val::Infinite,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

/// p-adic valuation of a nonzero integer by factor counting.
pub(crate) fn bigint_valuation(n: &BigInt, p: u64) -> i64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

/// Exact p-adic valuation of a rational number; `v(0) = +infinity`.
pub fn rational_valuation(r: &BigRational, p: u64) -> Val {
    if r.is_zero() {
        return Val::Infinite;
    }
    let v = bigint_valuation(r.numer(), p) - bigint_valuation(r.denom(), p);
    Val::int(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_valuations() {
        assert_eq!(rational_valuation(&rat(50, 1), 5), Val::int(2));
        assert_eq!(rational_valuation(&rat(3, 5), 5), Val::int(-1));
        assert_eq!(rational_valuation(&rat(0, 1), 5), Val::Infinite);
        assert_eq!(rational_valuation(&rat(-75, 10), 5), Val::int(1));
    }

    #[test]
    fn ordering_puts_infinity_on_top() {
        assert!(Val::Infinite > Val::int(1_000_000));
        assert!(Val::frac(1, 2) < Val::int(1));
        assert_eq!(Val::frac(2, 4), Val::frac(1, 2));
    }
}
