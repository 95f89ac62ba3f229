//! The distribution spec file: atoms plus uniform pieces, exact numbers.

use monoinv_core::measure::{Atom, PiecewiseMeasure, UniformPiece};
use monoinv_core::repr::rat;
use monoinv_core::{parse_rational, ExtendedReal, Interval, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A number given either as a string (`"p/q"`, decimal, `"inf"`) or as a
/// plain JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Json(serde_json::Number),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Text(s) => s.clone(),
            Num::Json(n) => n.to_string(),
        }
    }

    fn rational(&self) -> Result<Rational, CliError> {
        parse_rational(&self.text()).map_err(|e| CliError::Parse(e.to_string()))
    }

    fn extended(&self) -> Result<ExtendedReal, CliError> {
        ExtendedReal::parse(&self.text()).map_err(|e| CliError::Parse(e.to_string()))
    }
}

impl From<String> for Num {
    fn from(s: String) -> Self {
        Num::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub x: Num,
    pub mass: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceSpec {
    pub a: Num,
    pub b: Num,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierSpec {
    pub lo: Num,
    pub hi: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionSpec {
    #[serde(default)]
    pub atoms: Vec<AtomSpec>,
    #[serde(default)]
    pub uniform_pieces: Vec<PieceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<CarrierSpec>,
}

impl DistributionSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("spec: {e}")))
    }

    pub fn to_measure(&self) -> Result<PiecewiseMeasure, CliError> {
        let carrier = match &self.carrier {
            None => Interval::real_line(),
            Some(c) => {
                let (lo, hi) = (c.lo.extended()?, c.hi.extended()?);
                if lo >= hi {
                    return Err(CliError::Invalid(format!("carrier ({lo}, {hi}) is empty")));
                }
                Interval::open(lo, hi)
            }
        };
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for a in &self.atoms {
            atoms.push(Atom::new(a.x.rational()?, a.mass.rational()?));
        }
        let mut pieces = Vec::with_capacity(self.uniform_pieces.len());
        for p in &self.uniform_pieces {
            let (a, b) = (p.a.extended()?, p.b.extended()?);
            if a >= b {
                return Err(CliError::Invalid(format!("piece ({a}, {b}) is empty")));
            }
            let interval = Interval::open(a, b);
            let density = match (&p.mass, &p.density) {
                (Some(m), None) => {
                    let len = interval.length().ok_or_else(|| {
                        CliError::Invalid(format!("piece {interval} has infinite length; give a density"))
                    })?;
                    m.rational()? / len
                }
                (None, Some(d)) => d.rational()?,
                _ => return Err(CliError::Invalid(format!("piece {interval} needs exactly one of mass and density"))),
            };
            pieces.push(UniformPiece::new(interval, density));
        }
        PiecewiseMeasure::new(carrier, atoms, pieces).map_err(|e| CliError::Invalid(e.to_string()))
    }

    /// Canonical spec of a measure: sorted, merged, densities only.
    pub fn from_measure(m: &PiecewiseMeasure) -> Self {
        let carrier = (m.carrier() != &Interval::real_line())
            .then(|| CarrierSpec { lo: m.carrier().lo().to_string().into(), hi: m.carrier().hi().to_string().into() });
        DistributionSpec {
            atoms: m
                .atoms()
                .iter()
                .map(|a| AtomSpec { x: rat(&a.location).into(), mass: rat(&a.mass).into() })
                .collect(),
            uniform_pieces: m
                .pieces()
                .iter()
                .map(|p| PieceSpec {
                    a: p.interval.lo().to_string().into(),
                    b: p.interval.hi().to_string().into(),
                    mass: None,
                    density: Some(rat(&p.density).into()),
                })
                .collect(),
            carrier,
        }
    }
}

/// `0` if it lies in the carrier, else the midpoint of a bounded carrier,
/// else one unit inside the finite end.
pub fn default_anchor(carrier: &Interval) -> Rational {
    let zero = Rational::from_integer(0.into());
    if carrier.contains(&zero) {
        return zero;
    }
    let one = Rational::from_integer(1.into());
    match (carrier.lo(), carrier.hi()) {
        (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => (a + b) / Rational::from_integer(2.into()),
        (ExtendedReal::Finite(a), _) => a + one,
        (_, ExtendedReal::Finite(b)) => b - one,
        _ => zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoinv_core::{int, ratio};

    #[test]
    fn parses_masses_and_densities() {
        let s = DistributionSpec::parse(
            r#"{"atoms":[{"x":"1/2","mass":"0.5"}],"uniform_pieces":[{"a":0,"b":"1","mass":"1/2"}]}"#,
        )
        .unwrap();
        let m = s.to_measure().unwrap();
        assert_eq!(m.atoms()[0].mass, ratio(1, 2));
        assert_eq!(m.pieces()[0].density, ratio(1, 2));
    }

    #[test]
    fn rejects_bad_specs() {
        let both = r#"{"uniform_pieces":[{"a":"0","b":"1","mass":"1","density":"1"}]}"#;
        assert!(matches!(DistributionSpec::parse(both).unwrap().to_measure(), Err(CliError::Invalid(_))));
        let overlap = r#"{"uniform_pieces":[{"a":"0","b":"2","mass":"1"},{"a":"1","b":"3","mass":"1"}]}"#;
        assert!(matches!(DistributionSpec::parse(overlap).unwrap().to_measure(), Err(CliError::Invalid(_))));
        let negative = r#"{"atoms":[{"x":"0","mass":"-1"}]}"#;
        assert!(matches!(DistributionSpec::parse(negative).unwrap().to_measure(), Err(CliError::Invalid(_))));
        assert!(matches!(DistributionSpec::parse("{"), Err(CliError::Parse(_))));
        let garbage = r#"{"atoms":[{"x":"abc","mass":"1"}]}"#;
        assert!(matches!(DistributionSpec::parse(garbage).unwrap().to_measure(), Err(CliError::Parse(_))));
    }

    #[test]
    fn anchors() {
        assert_eq!(default_anchor(&Interval::real_line()), int(0));
        assert_eq!(default_anchor(&Interval::open_finite(int(1), int(3))), int(2));
        assert_eq!(default_anchor(&Interval::open(int(2).into(), ExtendedReal::PosInf)), int(3));
        assert_eq!(default_anchor(&Interval::open(ExtendedReal::NegInf, int(-2).into())), int(-3));
    }
}
