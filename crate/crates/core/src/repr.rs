//! Serializable views of the core types. Every exact quantity is a string:
//! `"p/q"`, an integer, or `"-inf"` / `"inf"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::measure::{Atom, PiecewiseMeasure, UniformPiece};
use crate::monotone::{Affine, PiecewiseMonotone};
use crate::number::{format_rational, parse_rational, ExtendedReal, Rational};
use crate::step::StepFunction;
use crate::unimodal::{Classification, ModalInterval};

pub fn rat(q: &Rational) -> String {
    format_rational(q)
}

pub fn ext(x: &ExtendedReal) -> String {
    x.to_string()
}

/// Serde adapter for a [`Rational`] stored as a string.
pub mod rational_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of [`Rational`]s stored as strings.
pub mod rational_strings {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(qs.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepr {
    pub lo: String,
    pub hi: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub lo_closed: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub hi_closed: bool,
}

impl From<&Interval> for IntervalRepr {
    fn from(iv: &Interval) -> Self {
        IntervalRepr { lo: ext(iv.lo()), hi: ext(iv.hi()), lo_closed: iv.lo_closed(), hi_closed: iv.hi_closed() }
    }
}

impl IntervalRepr {
    pub fn to_interval(&self) -> Result<Interval> {
        Interval::new(ExtendedReal::parse(&self.lo)?, ExtendedReal::parse(&self.hi)?, self.lo_closed, self.hi_closed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModalRepr {
    pub lo: String,
    pub hi: String,
}

impl From<&ModalInterval> for ModalRepr {
    fn from(m: &ModalInterval) -> Self {
        ModalRepr { lo: ext(&m.lo), hi: ext(&m.hi) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointRepr {
    pub x: String,
    pub left: String,
    pub right: String,
}

/// A function class: regular domain, breakpoints with one-sided limits,
/// per-segment slopes, and the intercept of the first piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneRepr {
    pub domain: IntervalRepr,
    pub breakpoints: Vec<BreakpointRepr>,
    pub slopes: Vec<String>,
    pub first_intercept: String,
}

impl From<&PiecewiseMonotone> for MonotoneRepr {
    fn from(g: &PiecewiseMonotone) -> Self {
        MonotoneRepr {
            domain: g.regular_domain().into(),
            breakpoints: g
                .breakpoints()
                .iter()
                .map(|b| BreakpointRepr { x: rat(&b.x), left: rat(&b.left_limit), right: rat(&b.right_limit) })
                .collect(),
            slopes: g.slopes().iter().map(rat).collect(),
            first_intercept: rat(&g.pieces()[0].intercept),
        }
    }
}

impl MonotoneRepr {
    pub fn to_function(&self) -> Result<PiecewiseMonotone> {
        let domain = self.domain.to_interval()?;
        let slopes = self.slopes.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        if slopes.len() != self.breakpoints.len() + 1 {
            return Err(Error::AffineMismatch("slope count must be breakpoints + 1".into()));
        }
        let mut cuts = Vec::with_capacity(self.breakpoints.len());
        let mut pieces = vec![Affine::new(slopes[0].clone(), parse_rational(&self.first_intercept)?)];
        for (i, b) in self.breakpoints.iter().enumerate() {
            let x = parse_rational(&b.x)?;
            let left = parse_rational(&b.left)?;
            if pieces[i].at(&x) != left {
                return Err(Error::AffineMismatch(format!("left limit at {x}")));
            }
            pieces.push(Affine::through(&x, &parse_rational(&b.right)?, slopes[i + 1].clone()));
            cuts.push(x);
        }
        PiecewiseMonotone::from_pieces(domain, cuts, pieces)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRepr {
    pub carrier: IntervalRepr,
    pub knots: Vec<String>,
    pub values: Vec<String>,
}

impl From<&StepFunction> for StepRepr {
    fn from(f: &StepFunction) -> Self {
        StepRepr {
            carrier: f.carrier().into(),
            knots: f.knots().iter().map(rat).collect(),
            values: f.values().iter().map(rat).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomRepr {
    pub x: String,
    pub mass: String,
}

impl From<&Atom> for AtomRepr {
    fn from(a: &Atom) -> Self {
        AtomRepr { x: rat(&a.location), mass: rat(&a.mass) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceRepr {
    pub a: String,
    pub b: String,
    pub density: String,
}

impl From<&UniformPiece> for PieceRepr {
    fn from(p: &UniformPiece) -> Self {
        PieceRepr { a: ext(p.interval.lo()), b: ext(p.interval.hi()), density: rat(&p.density) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureRepr {
    pub carrier: IntervalRepr,
    pub atoms: Vec<AtomRepr>,
    pub pieces: Vec<PieceRepr>,
}

impl From<&PiecewiseMeasure> for MeasureRepr {
    fn from(m: &PiecewiseMeasure) -> Self {
        MeasureRepr {
            carrier: m.carrier().into(),
            atoms: m.atoms().iter().map(AtomRepr::from).collect(),
            pieces: m.pieces().iter().map(PieceRepr::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRepr {
    pub cdf_unimodal: bool,
    pub modes: Option<ModalRepr>,
    pub dens_unimodal_abs_part: bool,
    pub dens_modes: Option<ModalRepr>,
    pub quantile_unimodal: bool,
    pub quantile_modes: Option<ModalRepr>,
    pub atom_at_mode: Option<AtomRepr>,
    pub qf_absolutely_continuous: bool,
}

impl From<&Classification> for ClassificationRepr {
    fn from(c: &Classification) -> Self {
        ClassificationRepr {
            cdf_unimodal: c.cdf_unimodal,
            modes: c.modes.as_ref().map(ModalRepr::from),
            dens_unimodal_abs_part: c.dens_unimodal_abs_part,
            dens_modes: c.dens_modes.as_ref().map(ModalRepr::from),
            quantile_unimodal: c.quantile_unimodal,
            quantile_modes: c.quantile_modes.as_ref().map(ModalRepr::from),
            atom_at_mode: c.atom_at_mode.as_ref().map(AtomRepr::from),
            qf_absolutely_continuous: c.qf_absolutely_continuous,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn monotone_round_trip() {
        for g in
            [fixtures::fix_a_cdf(), fixtures::fix_a_qf(), fixtures::fix_d_cdf(), fixtures::identity_unit().unwrap()]
        {
            let r = MonotoneRepr::from(&g);
            let json = serde_json::to_string(&r).unwrap();
            let back: MonotoneRepr = serde_json::from_str(&json).unwrap();
            assert_eq!(back.to_function().unwrap(), g);
        }
    }

    #[test]
    fn rationals_are_strings() {
        let r = MonotoneRepr::from(&fixtures::fix_d_cdf());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["breakpoints"][1]["left"], "1/4");
        assert_eq!(json["domain"]["lo"], "-inf");
    }
}
