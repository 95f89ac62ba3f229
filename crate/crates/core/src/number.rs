//! Exact scalars: arbitrary-precision rationals and their two-point
//! compactification.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.125"`.
///
/// Decimals are converted exactly: `d` fractional digits give the
/// denominator `10^d` before reduction.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || Error::Parse(s.to_string());
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| err())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if neg { -value } else { value })
}

/// Canonical text form: `"p/q"`, or just `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Largest numerator or denominator magnitude, used to bound generated data.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

pub(crate) fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// A point of the extended real line `[-inf, +inf]`.
///
/// The derived order is the usual one: `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedReal {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtendedReal {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedReal::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn zero() -> Self {
        ExtendedReal::Finite(Rational::zero())
    }

    /// Compares against a finite rational without cloning.
    pub fn cmp_finite(&self, q: &Rational) -> Ordering {
        match self {
            ExtendedReal::NegInf => Ordering::Less,
            ExtendedReal::Finite(p) => p.cmp(q),
            ExtendedReal::PosInf => Ordering::Greater,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ExtendedReal::NegInf => ExtendedReal::PosInf,
            ExtendedReal::Finite(q) => ExtendedReal::Finite(-q),
            ExtendedReal::PosInf => ExtendedReal::NegInf,
        }
    }

    /// Parses a rational or one of `-inf`, `inf`, `+inf`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-Inf" | "-infinity" => Ok(ExtendedReal::NegInf),
            "inf" | "+inf" | "Inf" | "+Inf" | "infinity" => Ok(ExtendedReal::PosInf),
            other => parse_rational(other).map(ExtendedReal::Finite),
        }
    }
}

impl From<Rational> for ExtendedReal {
    fn from(q: Rational) -> Self {
        ExtendedReal::Finite(q)
    }
}

impl From<&Rational> for ExtendedReal {
    fn from(q: &Rational) -> Self {
        ExtendedReal::Finite(q.clone())
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => f.write_str("-inf"),
            ExtendedReal::Finite(q) => write!(f, "{q}"),
            ExtendedReal::PosInf => f.write_str("inf"),
        }
    }
}
