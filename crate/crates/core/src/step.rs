//! Piecewise-constant functions up to equality almost everywhere.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::monotone::PiecewiseMonotone;
use crate::number::{int, midpoint, ExtendedReal, Rational};

/// An a.e. class of non-negative step functions on an open carrier.
///
/// Only segment values are stored; knots carry no value. Adjacent segments
/// with equal values are merged, so `==` is a.e. equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepFunction {
    carrier: Interval,
    knots: Vec<Rational>,
    values: Vec<Rational>,
}

impl StepFunction {
    pub fn new(carrier: Interval, knots: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::EmptyInterval);
        }
        if !carrier.is_open() {
            return Err(Error::InvalidInterval(format!("carrier {carrier} must be open")));
        }
        if values.len() != knots.len() + 1 {
            return Err(Error::AffineMismatch(format!(
                "{} knots need {} values, got {}",
                knots.len(),
                knots.len() + 1,
                values.len()
            )));
        }
        for (i, k) in knots.iter().enumerate() {
            if !carrier.contains(k) || (i > 0 && knots[i - 1] >= *k) {
                return Err(Error::UnorderedBreakpoints(format!("knot {k} in {carrier}")));
            }
        }
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::InvalidMeasure(format!("negative step value {v}")));
        }
        Ok(StepFunction { carrier, knots, values }.canonical())
    }

    pub fn constant(carrier: Interval, value: Rational) -> Result<Self> {
        StepFunction::new(carrier, Vec::new(), vec![value])
    }

    fn canonical(self) -> Self {
        let mut knots = Vec::with_capacity(self.knots.len());
        let mut values: Vec<Rational> = Vec::with_capacity(self.values.len());
        let mut it = self.values.into_iter();
        values.push(it.next().expect("one value"));
        for (k, v) in self.knots.into_iter().zip(it) {
            if values.last() != Some(&v) {
                knots.push(k);
                values.push(v);
            }
        }
        StepFunction { carrier: self.carrier, knots, values }
    }

    pub fn carrier(&self) -> &Interval {
        &self.carrier
    }

    pub fn knots(&self) -> &[Rational] {
        &self.knots
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn segment(&self, i: usize) -> (ExtendedReal, ExtendedReal) {
        let lo = if i == 0 { self.carrier.lo().clone() } else { self.knots[i - 1].clone().into() };
        let hi = if i == self.knots.len() { self.carrier.hi().clone() } else { self.knots[i].clone().into() };
        (lo, hi)
    }

    pub fn segments(&self) -> impl Iterator<Item = (Interval, &Rational)> + '_ {
        self.values.iter().enumerate().map(|(i, v)| {
            let (lo, hi) = self.segment(i);
            (Interval::open(lo, hi), v)
        })
    }

    /// Value off the knots; `None` at a knot or outside the carrier.
    pub fn value_at(&self, x: &Rational) -> Option<&Rational> {
        if !self.carrier.contains(x) {
            return None;
        }
        match self.knots.binary_search(x) {
            Ok(_) => None,
            Err(i) => Some(&self.values[i]),
        }
    }

    /// `c - f`, for the quasi-convex / quasi-concave duality.
    pub fn reflect(&self, c: &Rational) -> Result<StepFunction> {
        let values = self.values.iter().map(|v| c - v).collect();
        StepFunction::new(self.carrier.clone(), self.knots.clone(), values)
    }

    pub fn max_value(&self) -> &Rational {
        self.values.iter().max().expect("one value")
    }
}

/// The a.e. class of `x -> f(g(x))` on the regular domain of `g`.
///
/// Every segment of `g` is split at the preimages of the knots of `f`. A
/// strictly increasing segment must map into the closure of the carrier of
/// `f`; a flat segment must take a value strictly inside the carrier that is
/// not a knot, otherwise the composition is not determined on a set of
/// positive length.
pub fn step_compose(f: &StepFunction, g: &PiecewiseMonotone) -> Result<StepFunction> {
    let mut knots: Vec<Rational> = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for (i, piece) in g.pieces().iter().enumerate() {
        let (p, q) = g.segment(i);
        if i > 0 {
            knots.push(p.finite().expect("inner cut").clone());
        }
        if piece.slope.is_zero() {
            let v = &piece.intercept;
            if !f.carrier().contains(v) {
                return Err(Error::CarrierMismatch(format!("flat value {v} outside {}", f.carrier())));
            }
            match f.value_at(v) {
                Some(val) => values.push(val.clone()),
                None => {
                    return Err(Error::AmbiguousComposition(format!("flat value {v} is a knot of the outer function")))
                }
            }
            continue;
        }
        let image = Interval::open(piece.at_ext(&p), piece.at_ext(&q));
        if !image.is_subset_of(f.carrier()) {
            return Err(Error::CarrierMismatch(format!("image {image} not inside {}", f.carrier())));
        }
        let inner: Vec<&Rational> = f.knots().iter().filter(|k| image.contains(k)).collect();
        let mut start = image.lo().clone();
        for k in inner {
            let x = (k - &piece.intercept) / &piece.slope;
            values.push(f.value_at(&probe(&start, &k.clone().into())).expect("inside").clone());
            knots.push(x);
            start = k.clone().into();
        }
        values.push(f.value_at(&probe(&start, image.hi())).expect("inside").clone());
    }
    StepFunction::new(g.regular_domain().clone(), knots, values)
}

/// A rational strictly inside the nonempty open interval `(lo, hi)`.
pub fn probe(lo: &ExtendedReal, hi: &ExtendedReal) -> Rational {
    match (lo, hi) {
        (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => midpoint(a, b),
        (ExtendedReal::Finite(a), _) => a + int(1),
        (_, ExtendedReal::Finite(b)) => b - int(1),
        _ => Rational::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::number::ratio;

    fn unit() -> Interval {
        Interval::open_finite(int(0), int(1))
    }

    #[test]
    fn merges_equal_neighbours() {
        let f = StepFunction::new(unit(), vec![ratio(1, 3), ratio(2, 3)], vec![int(1), int(1), int(2)]).unwrap();
        assert_eq!(f.knots(), &[ratio(2, 3)]);
        assert_eq!(f.value_at(&ratio(1, 2)), Some(&int(1)));
        assert_eq!(f.value_at(&ratio(2, 3)), None);
    }

    #[test]
    fn compose_with_restricted_cdf() {
        let f = StepFunction::new(unit(), vec![ratio(1, 4), ratio(3, 4)], vec![int(2), int(0), int(2)]).unwrap();
        let g = fixtures::fix_d_cdf().restrict(&unit()).unwrap();
        assert_eq!(step_compose(&f, &g).unwrap(), StepFunction::constant(unit(), int(2)).unwrap());
    }

    #[test]
    fn compose_constant_and_identity() {
        let c = StepFunction::constant(Interval::real_line(), int(7)).unwrap();
        let g = fixtures::fix_a_cdf();
        assert_eq!(step_compose(&c, &g).unwrap(), StepFunction::constant(Interval::real_line(), int(7)).unwrap());
        let ind = StepFunction::new(Interval::real_line(), vec![int(0)], vec![int(0), int(1)]).unwrap();
        let id = PiecewiseMonotone::identity(Interval::real_line()).unwrap();
        assert_eq!(step_compose(&ind, &id).unwrap(), ind);
    }

    #[test]
    fn compose_rejects_bad_flats() {
        let f = StepFunction::new(unit(), vec![ratio(1, 2)], vec![int(1), int(2)]).unwrap();
        let g = PiecewiseMonotone::affine(unit(), int(0), ratio(1, 2)).unwrap();
        assert!(matches!(step_compose(&f, &g), Err(Error::AmbiguousComposition(_))));
        assert!(matches!(step_compose(&f, &fixtures::fix_a_cdf()), Err(Error::CarrierMismatch(_))));
    }
}
