//! The JSON report and the plot-point CSV.

use monoinv_core::measure::{distribution_function, lebesgue_decompose, PiecewiseMeasure};
use monoinv_core::repr::{rat, AtomRepr, ClassificationRepr, IntervalRepr, MonotoneRepr, StepRepr};
use monoinv_core::unimodal::{classify, quantile_density, quantile_function};
use monoinv_core::{Error, ExtendedReal, PiecewiseMonotone, Rational, Version};
use serde::Serialize;

use crate::spec::DistributionSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Intervals {
    pub regular_domain: IntervalRepr,
    pub mass_interval: IntervalRepr,
    pub supporting_interval: IntervalRepr,
}

impl Intervals {
    fn of(g: &PiecewiseMonotone) -> Result<Self, Error> {
        Ok(Intervals {
            regular_domain: g.regular_domain().into(),
            mass_interval: (&g.mass_interval()?).into(),
            supporting_interval: (&g.supporting_interval()?).into(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub atoms: Vec<AtomRepr>,
    pub abs_density: StepRepr,
}

impl Decomposition {
    fn of(m: &PiecewiseMeasure) -> Self {
        let (abs, sing) = lebesgue_decompose(m);
        Decomposition {
            atoms: sing.atoms().iter().map(AtomRepr::from).collect(),
            abs_density: (&abs.abs_density()).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: DistributionSpec,
    pub anchor: String,
    pub classification: ClassificationRepr,
    pub cdf_intervals: Intervals,
    pub quantile_intervals: Intervals,
    pub cdf: MonotoneRepr,
    pub quantile: MonotoneRepr,
    pub decomposition: Decomposition,
    pub quantile_density: Option<StepRepr>,
    pub warnings: Vec<String>,
}

/// Everything derived from one measure at one anchor.
pub struct Analysis {
    pub measure: PiecewiseMeasure,
    pub anchor: Rational,
    pub cdf: PiecewiseMonotone,
    pub quantile: PiecewiseMonotone,
}

impl Analysis {
    pub fn new(measure: PiecewiseMeasure, anchor: Rational) -> Result<Self, Error> {
        let cdf = distribution_function(&measure, &anchor)?;
        let quantile = quantile_function(&cdf)?;
        Ok(Analysis { measure, anchor, cdf, quantile })
    }

    pub fn report(&self) -> Result<Report, Error> {
        let mut warnings = Vec::new();
        let c = classify(&self.cdf)?;
        let qd = match quantile_density(&self.cdf) {
            Ok(d) => Some(StepRepr::from(&d)),
            Err(Error::QfNotAbsolutelyContinuous(x)) => {
                warnings.push(format!("quantile function jumps at {x}; no quantile density"));
                None
            }
            Err(e) => return Err(e),
        };
        if self.cdf.limit_at_neg_inf() != ExtendedReal::zero() {
            warnings.push(format!(
                "distribution function is anchored at {}, so its range starts at {}",
                rat(&self.anchor),
                self.cdf.limit_at_neg_inf()
            ));
        }
        Ok(Report {
            input: DistributionSpec::from_measure(&self.measure),
            anchor: rat(&self.anchor),
            classification: (&c).into(),
            cdf_intervals: Intervals::of(&self.cdf)?,
            quantile_intervals: Intervals::of(&self.quantile)?,
            cdf: (&self.cdf).into(),
            quantile: (&self.quantile).into(),
            decomposition: Decomposition::of(&self.measure),
            quantile_density: qd,
            warnings,
        })
    }
}

/// `n + 1` equally spaced rows `x,left,right` over the closure of the
/// regular domain, or one unit beyond the extreme breakpoints where the
/// domain is unbounded.
pub fn plot_points(g: &PiecewiseMonotone, n: usize) -> String {
    let one = Rational::from_integer(1.into());
    let dom = g.regular_domain();
    let first = g.cuts().first().cloned();
    let last = g.cuts().last().cloned();
    let lo = match dom.lo() {
        ExtendedReal::Finite(a) => a.clone(),
        _ => match (&first, dom.hi().finite()) {
            (Some(c), _) => c - &one,
            (None, Some(b)) => b - &one,
            (None, None) => -one.clone(),
        },
    };
    let hi = match dom.hi() {
        ExtendedReal::Finite(b) => b.clone(),
        _ => match (&last, dom.lo().finite()) {
            (Some(c), _) => c + &one,
            (None, Some(a)) => a + &one,
            (None, None) => one.clone(),
        },
    };
    let hi = if hi <= lo { &lo + &one } else { hi };
    let n = n.max(1);
    let step = (&hi - &lo) / Rational::from_integer(n.into());
    let mut out = String::from("x,left,right\n");
    for i in 0..=n {
        let x = &lo + &step * Rational::from_integer(i.into());
        let l = g.eval(&x, Version::Left);
        let r = g.eval(&x, Version::Right);
        out.push_str(&format!("{},{},{}\n", rat(&x), l, r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoinv_core::fixtures;

    #[test]
    fn plot_of_the_identity() {
        let id = fixtures::identity_unit().unwrap();
        let csv = plot_points(&id, 2);
        // outside the regular domain the embedding takes over
        assert_eq!(csv, "x,left,right\n0,-inf,0\n1/2,1/2,1/2\n1,1,inf\n");
    }

    #[test]
    fn plot_shows_both_limits_at_a_jump() {
        let csv = plot_points(&fixtures::fix_d_cdf(), 4);
        assert!(csv.contains("1/2,1/4,3/4\n"), "{csv}");
    }
}
