//! Quasi-concavity, quasi-convexity and the three notions of unimodality.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::measure::Atom;
use crate::monotone::PiecewiseMonotone;
use crate::number::{ExtendedReal, Rational};
use crate::step::StepFunction;

pub use crate::step::step_compose;

/// A closed interval `[lo, hi]` of modes; infinite ends mean "at infinity".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModalInterval {
    pub lo: ExtendedReal,
    pub hi: ExtendedReal,
}

impl ModalInterval {
    pub fn new(lo: ExtendedReal, hi: ExtendedReal) -> Self {
        debug_assert!(lo <= hi);
        ModalInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        ModalInterval { lo: x.clone().into(), hi: x.into() }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.cmp_finite(x).is_le() && self.hi.cmp_finite(x).is_ge()
    }
}

impl std::fmt::Display for ModalInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub cdf_unimodal: bool,
    pub modes: Option<ModalInterval>,
    pub dens_unimodal_abs_part: bool,
    pub dens_modes: Option<ModalInterval>,
    pub quantile_unimodal: bool,
    pub quantile_modes: Option<ModalInterval>,
    pub atom_at_mode: Option<Atom>,
    pub qf_absolutely_continuous: bool,
}

/// Values of consecutive segments with their bounds.
fn segments_of(f: &StepFunction, extend_by_zero: bool) -> Vec<(ExtendedReal, ExtendedReal, Rational)> {
    let mut out = Vec::with_capacity(f.values().len() + 2);
    if extend_by_zero && f.carrier().lo().is_finite() {
        out.push((ExtendedReal::NegInf, f.carrier().lo().clone(), Rational::zero()));
    }
    for (i, v) in f.values().iter().enumerate() {
        let (lo, hi) = f.segment(i);
        out.push((lo, hi, v.clone()));
    }
    if extend_by_zero && f.carrier().hi().is_finite() {
        out.push((f.carrier().hi().clone(), ExtendedReal::PosInf, Rational::zero()));
    }
    out
}

/// Non-decreasing, then non-increasing.
fn rises_then_falls(v: &[&Rational]) -> bool {
    let mut i = 0;
    while i + 1 < v.len() && v[i] <= v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] >= v[i + 1] {
        i += 1;
    }
    i + 1 >= v.len()
}

fn hull_of_extremes(segs: &[(ExtendedReal, ExtendedReal, Rational)], target: &Rational) -> ModalInterval {
    let hits: Vec<_> = segs.iter().filter(|s| &s.2 == target).collect();
    ModalInterval::new(hits[0].0.clone(), hits[hits.len() - 1].1.clone())
}

/// Whether some version of `f` is quasi-concave, and its modal interval
/// (closure of the argmax). With `extend_by_zero`, `f` is first extended by
/// zero to the whole line.
pub fn is_quasi_concave(f: &StepFunction, extend_by_zero: bool) -> (bool, Option<ModalInterval>) {
    let segs = segments_of(f, extend_by_zero);
    let values: Vec<&Rational> = segs.iter().map(|s| &s.2).collect();
    if !rises_then_falls(&values) {
        return (false, None);
    }
    let top = values.iter().max().expect("one segment");
    (true, Some(hull_of_extremes(&segs, top)))
}

/// Whether some version of `f` is quasi-convex, and the closure of its
/// argmin.
pub fn is_quasi_convex(f: &StepFunction) -> (bool, Option<ModalInterval>) {
    let segs = segments_of(f, false);
    let values: Vec<&Rational> = segs.iter().map(|s| &s.2).collect();
    let negated: Vec<Rational> = values.iter().map(|v| -(*v).clone()).collect();
    let negated_refs: Vec<&Rational> = negated.iter().collect();
    if !rises_then_falls(&negated_refs) {
        return (false, None);
    }
    let bottom = values.iter().min().expect("one segment");
    (true, Some(hull_of_extremes(&segs, bottom)))
}

/// Slope segments of the completed function: the function itself, extended
/// by constants beyond finite ends of its regular domain.
fn completed_slopes(g: &PiecewiseMonotone) -> Vec<(ExtendedReal, ExtendedReal, Rational)> {
    let mut out = Vec::with_capacity(g.segment_count() + 2);
    if g.regular_domain().lo().is_finite() {
        out.push((ExtendedReal::NegInf, g.regular_domain().lo().clone(), Rational::zero()));
    }
    for i in 0..g.segment_count() {
        let (lo, hi) = g.segment(i);
        out.push((lo, hi, g.pieces()[i].slope.clone()));
    }
    if g.regular_domain().hi().is_finite() {
        out.push((g.regular_domain().hi().clone(), ExtendedReal::PosInf, Rational::zero()));
    }
    out
}

fn monotone_run(s: &[(ExtendedReal, ExtendedReal, Rational)], increasing: bool) -> bool {
    s.windows(2).all(|w| if increasing { w[0].2 <= w[1].2 } else { w[0].2 >= w[1].2 })
}

/// Candidate split points of a segment sequence: `(extent, left part, right part)`.
/// Segment `k`'s interior puts `k` on both sides; the knot after segment
/// `k` splits between `k` and `k + 1`.
fn candidates(
    segs: &[(ExtendedReal, ExtendedReal, Rational)],
) -> Vec<(ModalInterval, std::ops::Range<usize>, std::ops::Range<usize>)> {
    let n = segs.len();
    let mut out = Vec::with_capacity(2 * n + 1);
    out.push((ModalInterval::new(segs[0].0.clone(), segs[0].0.clone()), 0..0, 0..n));
    for (k, (lo, hi, _)) in segs.iter().enumerate() {
        out.push((ModalInterval::new(lo.clone(), hi.clone()), 0..k + 1, k..n));
        out.push((ModalInterval::new(hi.clone(), hi.clone()), 0..k + 1, k + 1..n));
    }
    out
}

fn hull(admissible: impl Iterator<Item = ModalInterval>) -> Option<ModalInterval> {
    admissible.reduce(|a, b| ModalInterval::new(a.lo.min(b.lo), a.hi.max(b.hi)))
}

/// CDF-unimodality decided from the definition: convex up to some mode,
/// concave after it, with a possible jump only at that mode.
pub fn cdf_unimodal(g: &PiecewiseMonotone) -> (bool, Option<ModalInterval>) {
    let segs = completed_slopes(g);
    let jumps = g.jumps();
    if jumps.len() > 1 {
        return (false, None);
    }
    let jump_at = jumps.first().map(|(x, _)| ExtendedReal::from(x));
    let admissible = candidates(&segs).into_iter().filter_map(|(ext, left, right)| {
        if let Some(j) = &jump_at {
            if ext.lo != *j || ext.hi != *j {
                return None;
            }
        }
        let ok = monotone_run(&segs[left], true) && monotone_run(&segs[right], false);
        ok.then_some(ext)
    });
    let modes = hull(admissible);
    (modes.is_some(), modes)
}

/// The quantile function: the generalized inverse restricted to the open
/// range of `g`.
pub fn quantile_function(g: &PiecewiseMonotone) -> Result<PiecewiseMonotone> {
    let range = Interval::open(g.range_lo(), g.range_hi());
    if range.is_empty() {
        return Err(Error::ZeroMeasure);
    }
    g.generalized_inverse()?.restrict(&range)
}

/// The Radon–Nikodym derivative of the quantile function.
pub fn quantile_density(g: &PiecewiseMonotone) -> Result<StepFunction> {
    let q = quantile_function(g)?;
    if let Some((x, _)) = q.jumps().first() {
        return Err(Error::QfNotAbsolutelyContinuous(x.to_string()));
    }
    StepFunction::new(q.regular_domain().clone(), q.cuts().to_vec(), q.slopes())
}

/// Whether `q` is concave up to some `alpha` and convex after it, as a
/// continuous function; returns all admissible `alpha`.
pub fn qf_shape_check(q: &PiecewiseMonotone) -> (bool, Option<ModalInterval>) {
    if !q.jumps().is_empty() {
        return (false, None);
    }
    let segs: Vec<_> = (0..q.segment_count())
        .map(|i| {
            let (lo, hi) = q.segment(i);
            (lo, hi, q.pieces()[i].slope.clone())
        })
        .collect();
    let admissible = candidates(&segs)
        .into_iter()
        .filter(|(_, left, right)| monotone_run(&segs[left.clone()], false) && monotone_run(&segs[right.clone()], true))
        .map(|c| c.0);
    let alphas = hull(admissible);
    (alphas.is_some(), alphas)
}

/// Full classification of a distribution function (or any non-constant
/// non-decreasing function of locally finite mass).
pub fn classify(g: &PiecewiseMonotone) -> Result<Classification> {
    let (cdf, modes) = cdf_unimodal(g);
    let q = quantile_function(g)?;
    let qf_ac = q.jumps().is_empty();
    let (quantile_unimodal, quantile_modes) = match quantile_density(g) {
        Ok(qd) => is_quasi_convex(&qd),
        Err(Error::QfNotAbsolutelyContinuous(_)) => (false, None),
        Err(e) => return Err(e),
    };
    let abs_density = StepFunction::new(g.regular_domain().clone(), g.cuts().to_vec(), g.slopes())?;
    let (dens, dens_modes) = is_quasi_concave(&abs_density, true);
    let jumps = g.jumps();
    let atom_at_mode = match (cdf, jumps.as_slice()) {
        (true, [(x, m)]) => Some(Atom::new(x.clone(), m.clone())),
        _ => None,
    };
    if cdf && !(quantile_unimodal && qf_ac && dens) {
        return Err(Error::InternalInconsistency(format!(
            "CDF-unimodal but quantile-unimodal = {quantile_unimodal}, QF continuous = {qf_ac}, \
             density quasi-concave = {dens}"
        )));
    }
    Ok(Classification {
        cdf_unimodal: cdf,
        modes,
        dens_unimodal_abs_part: dens,
        dens_modes,
        quantile_unimodal,
        quantile_modes,
        atom_at_mode,
        qf_absolutely_continuous: qf_ac,
    })
}
