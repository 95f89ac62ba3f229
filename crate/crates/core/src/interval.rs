use std::fmt;

use crate::error::{Error, Result};
use crate::number::{ExtendedReal, Rational};

/// An interval of the extended real line with explicit endpoint closure.
///
/// Infinite endpoints are never closed. The empty interval has the single
/// canonical form `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: ExtendedReal,
    hi: ExtendedReal,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: ExtendedReal, hi: ExtendedReal, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!("{lo} > {hi}")));
        }
        let lo_closed = lo_closed && lo.is_finite();
        let hi_closed = hi_closed && hi.is_finite();
        let iv = Interval { lo, hi, lo_closed, hi_closed };
        Ok(if iv.is_empty_raw() { Interval::empty() } else { iv })
    }

    /// Open interval; an inverted or degenerate pair yields the empty interval.
    pub fn open(lo: ExtendedReal, hi: ExtendedReal) -> Self {
        if lo >= hi {
            return Interval::empty();
        }
        Interval { lo, hi, lo_closed: false, hi_closed: false }
    }

    /// Closed interval (infinite ends stay open); inverted pairs yield empty.
    pub fn closed(lo: ExtendedReal, hi: ExtendedReal) -> Self {
        if lo > hi || (lo == hi && !lo.is_finite()) {
            return Interval::empty();
        }
        let lo_closed = lo.is_finite();
        let hi_closed = hi.is_finite();
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn open_finite(lo: Rational, hi: Rational) -> Self {
        Interval::open(lo.into(), hi.into())
    }

    pub fn real_line() -> Self {
        Interval::open(ExtendedReal::NegInf, ExtendedReal::PosInf)
    }

    pub fn empty() -> Self {
        Interval { lo: ExtendedReal::zero(), hi: ExtendedReal::zero(), lo_closed: false, hi_closed: false }
    }

    fn is_empty_raw(&self) -> bool {
        self.lo == self.hi && !(self.lo_closed && self.hi_closed)
    }

    pub fn is_empty(&self) -> bool {
        self.is_empty_raw()
    }

    pub fn is_open(&self) -> bool {
        !self.lo_closed && !self.hi_closed
    }

    pub fn lo(&self) -> &ExtendedReal {
        &self.lo
    }

    pub fn hi(&self) -> &ExtendedReal {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn contains(&self, x: &Rational) -> bool {
        if self.is_empty() {
            return false;
        }
        let above = match self.lo.cmp_finite(x) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => self.lo_closed,
            std::cmp::Ordering::Greater => false,
        };
        let below = match self.hi.cmp_finite(x) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => self.hi_closed,
            std::cmp::Ordering::Less => false,
        };
        above && below
    }

    /// Inclusion of point sets.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        if other.is_empty() {
            return false;
        }
        let lo_ok = other.lo < self.lo || (other.lo == self.lo && (other.lo_closed || !self.lo_closed));
        let hi_ok = self.hi < other.hi || (other.hi == self.hi && (other.hi_closed || !self.hi_closed));
        lo_ok && hi_ok
    }

    /// The open interior.
    pub fn interior(&self) -> Interval {
        Interval::open(self.lo.clone(), self.hi.clone())
    }

    /// The closure (infinite ends remain open).
    pub fn closure(&self) -> Interval {
        if self.is_empty() {
            return Interval::empty();
        }
        Interval::closed(self.lo.clone(), self.hi.clone())
    }

    /// Lebesgue length, `None` when infinite.
    pub fn length(&self) -> Option<Rational> {
        if self.is_empty() {
            return Some(Rational::from_integer(0.into()));
        }
        match (&self.lo, &self.hi) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => Some(b - a),
            _ => None,
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        if self.is_empty() || other.is_empty() {
            return Interval::empty();
        }
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, hi, lo_closed, hi_closed).unwrap_or_else(|_| Interval::empty())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}
