//! Locally finite Borel measures made of atoms and uniform pieces.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::monotone::{Affine, PiecewiseMonotone, Version};
use crate::number::{ExtendedReal, Rational};
use crate::step::{probe, step_compose, StepFunction};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub location: Rational,
    pub mass: Rational,
}

impl Atom {
    pub fn new(location: Rational, mass: Rational) -> Self {
        Atom { location, mass }
    }
}

/// Constant density on an open interval, possibly of infinite length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformPiece {
    pub interval: Interval,
    pub density: Rational,
}

impl UniformPiece {
    pub fn new(interval: Interval, density: Rational) -> Self {
        UniformPiece { interval, density }
    }
}

/// A measure on the Borel sets of an open carrier interval.
///
/// Canonical form: atoms sorted by location, pieces sorted and disjoint,
/// touching pieces of equal density merged. `==` is therefore measure
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseMeasure {
    carrier: Interval,
    atoms: Vec<Atom>,
    pieces: Vec<UniformPiece>,
}

impl PiecewiseMeasure {
    /// Strict constructor: atoms at distinct locations, pieces pairwise
    /// disjoint, everything strictly inside the carrier.
    pub fn new(carrier: Interval, atoms: Vec<Atom>, pieces: Vec<UniformPiece>) -> Result<Self> {
        check_carrier(&carrier)?;
        let mut atoms = atoms;
        atoms.sort_by(|a, b| a.location.cmp(&b.location));
        for w in atoms.windows(2) {
            if w[0].location == w[1].location {
                return Err(Error::InvalidMeasure(format!("two atoms at {}", w[0].location)));
            }
        }
        let mut pieces = pieces;
        pieces.sort_by(|a, b| a.interval.lo().cmp(b.interval.lo()));
        for w in pieces.windows(2) {
            if w[0].interval.hi() > w[1].interval.lo() {
                return Err(Error::InvalidMeasure(format!("pieces {} and {} overlap", w[0].interval, w[1].interval)));
            }
        }
        let m = PiecewiseMeasure { carrier, atoms, pieces };
        m.check_parts()?;
        Ok(m.canonical())
    }

    /// Lenient constructor: atoms at the same location and overlapping
    /// pieces are added up.
    pub fn summing(carrier: Interval, atoms: Vec<Atom>, pieces: Vec<UniformPiece>) -> Result<Self> {
        check_carrier(&carrier)?;
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for a in atoms {
            *merged.entry(a.location).or_insert_with(Rational::zero) += a.mass;
        }
        let atoms = merged.into_iter().map(|(location, mass)| Atom { location, mass }).collect();
        let m = PiecewiseMeasure { carrier, atoms, pieces };
        m.check_parts()?;
        let pieces = add_pieces(&m.pieces, &[]);
        Ok(PiecewiseMeasure { pieces, ..m }.canonical())
    }

    pub fn zero(carrier: Interval) -> Result<Self> {
        PiecewiseMeasure::new(carrier, Vec::new(), Vec::new())
    }

    /// Lebesgue measure on the whole carrier.
    pub fn lebesgue(carrier: Interval) -> Result<Self> {
        let piece = UniformPiece::new(carrier.clone(), Rational::one());
        PiecewiseMeasure::new(carrier, Vec::new(), vec![piece])
    }

    /// Lebesgue measure restricted to `on`, carried on `carrier`.
    pub fn lebesgue_on(carrier: Interval, on: &Interval) -> Result<Self> {
        let on = on.interior().intersect(&carrier);
        if on.is_empty() {
            return PiecewiseMeasure::zero(carrier);
        }
        PiecewiseMeasure::new(carrier, Vec::new(), vec![UniformPiece::new(on, Rational::one())])
    }

    fn check_parts(&self) -> Result<()> {
        for a in &self.atoms {
            if !a.mass.is_positive() {
                return Err(Error::InvalidMeasure(format!("atom at {} has mass {}", a.location, a.mass)));
            }
            if !self.carrier.contains(&a.location) {
                return Err(Error::InvalidMeasure(format!("atom at {} outside {}", a.location, self.carrier)));
            }
        }
        for p in &self.pieces {
            if p.interval.is_empty() || !p.interval.is_open() {
                return Err(Error::InvalidMeasure(format!("piece {} is not a nonempty open interval", p.interval)));
            }
            if !p.density.is_positive() {
                return Err(Error::InvalidMeasure(format!("piece {} has density {}", p.interval, p.density)));
            }
            if !p.interval.is_subset_of(&self.carrier) {
                return Err(Error::InvalidMeasure(format!("piece {} outside {}", p.interval, self.carrier)));
            }
        }
        Ok(())
    }

    fn canonical(mut self) -> Self {
        let mut out: Vec<UniformPiece> = Vec::with_capacity(self.pieces.len());
        for p in self.pieces.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.interval.hi() == p.interval.lo() && last.density == p.density {
                    last.interval = Interval::open(last.interval.lo().clone(), p.interval.hi().clone());
                    continue;
                }
            }
            out.push(p);
        }
        self.pieces = out;
        self
    }

    pub fn carrier(&self) -> &Interval {
        &self.carrier
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn pieces(&self) -> &[UniformPiece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty() && self.pieces.is_empty()
    }

    /// Mass of an interval, `None` when infinite.
    pub fn mass(&self, of: &Interval) -> Option<Rational> {
        let mut total = Rational::zero();
        for a in &self.atoms {
            if of.contains(&a.location) {
                total += &a.mass;
            }
        }
        for p in &self.pieces {
            let len = p.interval.intersect(of).length()?;
            total += len * &p.density;
        }
        Some(total)
    }

    /// Sum of two measures on the same carrier.
    pub fn add(&self, other: &PiecewiseMeasure) -> Result<PiecewiseMeasure> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch(format!("{} vs {}", self.carrier, other.carrier)));
        }
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        let pieces = add_pieces(&self.pieces, &other.pieces);
        PiecewiseMeasure::summing(self.carrier.clone(), atoms, pieces)
    }

    /// Density of the absolutely continuous part as a step function on the
    /// carrier, zero off the pieces. Atoms are ignored.
    pub fn abs_density(&self) -> StepFunction {
        let mut knots: Vec<Rational> = self
            .pieces
            .iter()
            .flat_map(|p| [p.interval.lo(), p.interval.hi()])
            .filter_map(|e| e.finite())
            .filter(|e| self.carrier.contains(e))
            .cloned()
            .collect();
        knots.sort();
        knots.dedup();
        let values = (0..=knots.len())
            .map(|i| {
                let lo = if i == 0 { self.carrier.lo().clone() } else { knots[i - 1].clone().into() };
                let hi = if i == knots.len() { self.carrier.hi().clone() } else { knots[i].clone().into() };
                let x = probe(&lo, &hi);
                self.pieces.iter().find(|p| p.interval.contains(&x)).map_or_else(Rational::zero, |p| p.density.clone())
            })
            .collect();
        StepFunction::new(self.carrier.clone(), knots, values).expect("pieces are ordered inside the carrier")
    }
}

fn check_carrier(carrier: &Interval) -> Result<()> {
    if carrier.is_empty() {
        return Err(Error::EmptyInterval);
    }
    if !carrier.is_open() {
        return Err(Error::InvalidInterval(format!("carrier {carrier} must be open")));
    }
    Ok(())
}

/// Pointwise sum of densities over the common refinement.
fn add_pieces(a: &[UniformPiece], b: &[UniformPiece]) -> Vec<UniformPiece> {
    let all: Vec<&UniformPiece> = a.iter().chain(b).collect();
    let mut ends: Vec<ExtendedReal> =
        all.iter().flat_map(|p| [p.interval.lo().clone(), p.interval.hi().clone()]).collect();
    ends.sort();
    ends.dedup();
    let mut out = Vec::new();
    for w in ends.windows(2) {
        let cell = Interval::open(w[0].clone(), w[1].clone());
        let x = probe(&w[0], &w[1]);
        let d: Rational = all.iter().filter(|p| p.interval.contains(&x)).map(|p| p.density.clone()).sum();
        if d.is_positive() {
            out.push(UniformPiece::new(cell, d));
        }
    }
    out
}

/// `mu_G`, with `mu_G((x,y)) = G_l(y) - G_r(x)`.
pub fn associated_measure(g: &PiecewiseMonotone) -> PiecewiseMeasure {
    let atoms = g.jumps().into_iter().map(|(x, h)| Atom::new(x, h)).collect();
    let pieces = (0..g.segment_count())
        .filter(|&i| g.pieces()[i].slope.is_positive())
        .map(|i| {
            let (p, q) = g.segment(i);
            UniformPiece::new(Interval::open(p, q), g.pieces()[i].slope.clone())
        })
        .collect();
    PiecewiseMeasure::new(g.regular_domain().clone(), atoms, pieces).expect("segments of a valid function")
}

/// The right-continuous distribution function normalised by `F(z) = 0`.
pub fn distribution_function(m: &PiecewiseMeasure, z: &Rational) -> Result<PiecewiseMonotone> {
    if m.is_zero() {
        return Err(Error::ZeroMeasure);
    }
    if !m.carrier.contains(z) {
        return Err(Error::AnchorOutsideCarrier(z.to_string()));
    }
    let mut cuts: Vec<Rational> = m.atoms.iter().map(|a| a.location.clone()).collect();
    for p in &m.pieces {
        for end in [p.interval.lo(), p.interval.hi()] {
            if let Some(e) = end.finite() {
                if m.carrier.contains(e) {
                    cuts.push(e.clone());
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let density = m.abs_density();
    let mut pieces = Vec::with_capacity(cuts.len() + 1);
    for i in 0..=cuts.len() {
        let lo = if i == 0 { m.carrier.lo().clone() } else { cuts[i - 1].clone().into() };
        let hi = if i == cuts.len() { m.carrier.hi().clone() } else { cuts[i].clone().into() };
        let r = probe(&lo, &hi);
        let slope = density.value_at(&r).expect("probe avoids knots").clone();
        pieces.push(Affine::through(&r, &signed_mass(m, z, &r), slope));
    }
    PiecewiseMonotone::from_pieces(m.carrier.clone(), cuts, pieces)
}

/// `m((z, x])` for `x >= z`, `-m((x, z])` otherwise.
fn signed_mass(m: &PiecewiseMeasure, z: &Rational, x: &Rational) -> Rational {
    if x >= z {
        let iv = Interval::new(z.into(), x.into(), false, true).expect("ordered");
        m.mass(&iv).expect("bounded interval")
    } else {
        let iv = Interval::new(x.into(), z.into(), false, true).expect("ordered");
        -m.mass(&iv).expect("bounded interval")
    }
}

/// `(absolutely continuous part, singular part)` with respect to Lebesgue
/// measure. Singular parts here are purely atomic.
pub fn lebesgue_decompose(m: &PiecewiseMeasure) -> (PiecewiseMeasure, PiecewiseMeasure) {
    let abs = PiecewiseMeasure { carrier: m.carrier.clone(), atoms: Vec::new(), pieces: m.pieces.clone() };
    let sing = PiecewiseMeasure { carrier: m.carrier.clone(), atoms: m.atoms.clone(), pieces: Vec::new() };
    (abs, sing)
}

/// Decomposition of `m` with respect to `lambda|on`: the part of `m`
/// absolutely continuous to it, and the rest.
pub fn decompose_wrt_lebesgue_on(m: &PiecewiseMeasure, on: &Interval) -> (PiecewiseMeasure, PiecewiseMeasure) {
    let on = on.interior();
    let mut abs = Vec::new();
    let mut rest = Vec::new();
    for p in &m.pieces {
        let inside = p.interval.intersect(&on);
        if !inside.is_empty() {
            abs.push(UniformPiece::new(inside.clone(), p.density.clone()));
        }
        for outside in [
            Interval::open(p.interval.lo().clone(), on.lo().clone()),
            Interval::open(on.hi().clone(), p.interval.hi().clone()),
        ] {
            let part = outside.intersect(&p.interval);
            if !part.is_empty() {
                rest.push(UniformPiece::new(part, p.density.clone()));
            }
        }
        if on.is_empty() {
            rest.push(p.clone());
        }
    }
    let abs = PiecewiseMeasure::summing(m.carrier.clone(), Vec::new(), abs).expect("sub-pieces");
    let rest = PiecewiseMeasure::summing(m.carrier.clone(), m.atoms.clone(), rest).expect("sub-pieces");
    (abs, rest)
}

/// Radon–Nikodym derivative with respect to Lebesgue measure.
pub fn density(m: &PiecewiseMeasure) -> Result<StepFunction> {
    if !m.atoms.is_empty() {
        return Err(Error::NotAbsolutelyContinuous);
    }
    Ok(m.abs_density())
}

/// Image measure `t # m`, carried on the regular domain of the inverse of `t`.
pub fn pushforward(m: &PiecewiseMeasure, t: &PiecewiseMonotone) -> Result<PiecewiseMeasure> {
    if !m.carrier.is_subset_of(t.regular_domain()) {
        return Err(Error::CarrierMismatch(format!("carrier {} not inside {}", m.carrier, t.regular_domain())));
    }
    let carrier = Interval::open(t.limit_at_neg_inf(), t.limit_at_pos_inf());
    let jumps: Vec<Rational> = t.jumps().into_iter().map(|(x, _)| x).collect();
    let mut atoms = Vec::new();
    for a in &m.atoms {
        if jumps.binary_search(&a.location).is_ok() {
            return Err(Error::VersionAmbiguous(a.location.to_string()));
        }
        let y = t.eval(&a.location, Version::Left);
        atoms.push(Atom::new(y.finite().expect("inside the domain").clone(), a.mass.clone()));
    }
    let mut pieces = Vec::new();
    for p in &m.pieces {
        for i in 0..t.segment_count() {
            let (lo, hi) = t.segment(i);
            let part = p.interval.intersect(&Interval::open(lo, hi));
            if part.is_empty() {
                continue;
            }
            let piece = &t.pieces()[i];
            if piece.slope.is_zero() {
                let len = part.length().ok_or_else(|| {
                    Error::MassOnCarrierBoundary(format!("infinite mass sent to the point {}", piece.intercept))
                })?;
                atoms.push(Atom::new(piece.intercept.clone(), len * &p.density));
            } else {
                let image = Interval::open(piece.at_ext(part.lo()), piece.at_ext(part.hi()));
                pieces.push(UniformPiece::new(image, &p.density / &piece.slope));
            }
        }
    }
    if let Some(a) = atoms.iter().find(|a| !carrier.contains(&a.location)) {
        return Err(Error::MassOnCarrierBoundary(format!("atom at {} outside {carrier}", a.location)));
    }
    PiecewiseMeasure::summing(carrier, atoms, pieces)
}

/// `lambda_G`: Lebesgue measure on the mass interval `M_G`, carried on the
/// regular domain `I_G` and zero on `I_G \ M_G`.
pub fn lebesgue_restricted(g: &PiecewiseMonotone) -> Result<PiecewiseMeasure> {
    PiecewiseMeasure::lebesgue_on(g.regular_domain().clone(), &g.mass_interval()?)
}

/// `a << b`: every `b`-null set is `a`-null.
///
/// For these measures that means every atom of `a` is an atom of `b`, and
/// every piece of `a` lies, up to finitely many points, inside the pieces of
/// `b`.
pub fn is_abs_cont_wrt(a: &PiecewiseMeasure, b: &PiecewiseMeasure) -> Result<bool> {
    if a.carrier != b.carrier {
        return Err(Error::CarrierMismatch(format!("{} vs {}", a.carrier, b.carrier)));
    }
    let atoms_ok = a.atoms.iter().all(|x| b.atoms.iter().any(|y| y.location == x.location));
    let cover = union_of(&b.pieces);
    let pieces_ok = a.pieces.iter().all(|p| cover.iter().any(|c| p.interval.is_subset_of(c)));
    Ok(atoms_ok && pieces_ok)
}

/// Pieces merged across touching ends: the union up to finitely many points.
fn union_of(pieces: &[UniformPiece]) -> Vec<Interval> {
    let mut out: Vec<Interval> = Vec::new();
    for p in pieces {
        match out.last_mut() {
            Some(last) if last.hi() >= p.interval.lo() => {
                *last = Interval::open(last.lo().clone(), p.interval.hi().clone().max(last.hi().clone()));
            }
            _ => out.push(p.interval.clone()),
        }
    }
    out
}

/// Whether the generalized inverse `H` of `g` is absolutely continuous on
/// the open interval `on` (a subinterval of `I_H`).
///
/// Three characterisations are evaluated independently; a disagreement is
/// reported as [`Error::InternalInconsistency`].
pub fn gen_inverse_abs_cont(g: &PiecewiseMonotone, on: &Interval) -> Result<bool> {
    let h = g.generalized_inverse()?;
    gen_inverse_abs_cont_with(g, &h, on)
}

pub(crate) fn gen_inverse_abs_cont_with(g: &PiecewiseMonotone, h: &PiecewiseMonotone, on: &Interval) -> Result<bool> {
    if !on.is_open() || !on.is_subset_of(h.regular_domain()) {
        return Err(Error::InvalidInterval(format!("{on} is not an open subinterval of {}", h.regular_domain())));
    }
    let no_jumps = h.continuous_on(on);
    let m = g.preimage_interior(on);
    let positive_slopes = g.strictly_increasing_on(&m);
    let restricted = PiecewiseMeasure::lebesgue_on(g.regular_domain().clone(), &m)?;
    let dominated = is_abs_cont_wrt(&restricted, &associated_measure(g))?;
    if no_jumps != positive_slopes || no_jumps != dominated {
        return Err(Error::InternalInconsistency(format!(
            "on {on}: inverse continuous = {no_jumps}, slopes positive on {m} = {positive_slopes}, \
             lambda|M << mu = {dominated}"
        )));
    }
    Ok(no_jumps)
}

/// One compared segment of the inverse-function rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSegment {
    pub interval: Interval,
    pub g_abs: Rational,
    pub h_prime_at_g: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseRuleReport {
    pub mass_interval: Interval,
    pub segments: Vec<RuleSegment>,
}

impl InverseRuleReport {
    pub fn holds(&self) -> bool {
        self.segments.iter().all(|s| s.holds)
    }
}

/// Checks `g_abs = 1 / (h' o G)` segment by segment on the mass interval.
pub fn inverse_rule_check(g: &PiecewiseMonotone) -> Result<InverseRuleReport> {
    let h = g.generalized_inverse()?;
    if !gen_inverse_abs_cont_with(g, &h, h.regular_domain())? {
        return Err(Error::PreconditionFailed("the generalized inverse has a jump".into()));
    }
    let mass = g.mass_interval()?;
    let mut segments = Vec::new();
    if mass.is_empty() {
        return Ok(InverseRuleReport { mass_interval: mass, segments });
    }
    let h_prime = StepFunction::new(h.regular_domain().clone(), h.cuts().to_vec(), h.slopes())?;
    let composed = step_compose(&h_prime, &g.restrict(&mass)?)?;
    let g_abs = StepFunction::new(g.regular_domain().clone(), g.cuts().to_vec(), g.slopes())?;
    let mut ends: Vec<ExtendedReal> = vec![mass.lo().clone(), mass.hi().clone()];
    ends.extend(composed.knots().iter().chain(g_abs.knots()).filter(|k| mass.contains(k)).map(ExtendedReal::from));
    ends.sort();
    ends.dedup();
    for w in ends.windows(2) {
        let x = probe(&w[0], &w[1]);
        let ga = g_abs.value_at(&x).expect("probe avoids knots").clone();
        let hg = composed.value_at(&x).expect("probe avoids knots").clone();
        let holds = (&ga * &hg).is_one();
        segments.push(RuleSegment {
            interval: Interval::open(w[0].clone(), w[1].clone()),
            g_abs: ga,
            h_prime_at_g: hg,
            holds,
        });
    }
    Ok(InverseRuleReport { mass_interval: mass, segments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::number::{int, ratio};

    fn unit() -> Interval {
        Interval::open_finite(int(0), int(1))
    }

    fn fix_a_measure() -> PiecewiseMeasure {
        PiecewiseMeasure::new(
            Interval::real_line(),
            vec![],
            vec![
                UniformPiece::new(Interval::open_finite(int(0), ratio(1, 2)), int(1)),
                UniformPiece::new(Interval::open_finite(ratio(3, 2), int(2)), int(1)),
            ],
        )
        .unwrap()
    }

    fn fix_d_measure() -> PiecewiseMeasure {
        PiecewiseMeasure::new(
            Interval::real_line(),
            vec![Atom::new(ratio(1, 2), ratio(1, 2))],
            vec![UniformPiece::new(unit(), ratio(1, 2))],
        )
        .unwrap()
    }

    fn dirac() -> PiecewiseMeasure {
        PiecewiseMeasure::new(Interval::real_line(), vec![Atom::new(int(0), int(1))], vec![]).unwrap()
    }

    #[test]
    fn associated_measure_examples() {
        assert_eq!(associated_measure(&fixtures::fix_a_cdf()), fix_a_measure());
        assert_eq!(associated_measure(&fixtures::fix_c_cdf()), dirac());
        let inv = associated_measure(&fixtures::fix_a_qf());
        assert_eq!(inv.carrier(), &unit());
        assert_eq!(inv.atoms(), &[Atom::new(ratio(1, 2), int(1))]);
        // the two unit-density halves merge across the atom
        assert_eq!(inv.pieces(), &[UniformPiece::new(unit(), int(1))]);
    }

    #[test]
    fn associated_measure_matches_limits() {
        let g = fixtures::fix_d_cdf();
        let mu = associated_measure(&g);
        let pts: Vec<Rational> = (-4..=8).map(|k| ratio(k, 4)).collect();
        for x in &pts {
            for y in pts.iter().filter(|y| *y > x) {
                let lhs = mu.mass(&Interval::open_finite(x.clone(), y.clone())).unwrap();
                let rhs = g.eval(y, Version::Left).finite().unwrap() - g.eval(x, Version::Right).finite().unwrap();
                assert_eq!(lhs, rhs, "({x}, {y})");
            }
        }
    }

    #[test]
    fn distribution_function_examples() {
        let leb = PiecewiseMeasure::lebesgue(Interval::real_line()).unwrap();
        assert_eq!(
            distribution_function(&leb, &int(0)).unwrap(),
            PiecewiseMonotone::identity(Interval::real_line()).unwrap()
        );
        let f = distribution_function(&dirac(), &int(-1)).unwrap();
        assert_eq!(f, fixtures::fix_c_cdf());
        let fd = distribution_function(&fix_d_measure(), &ratio(1, 2)).unwrap();
        assert!(fd.versions_equal(&fixtures::fix_d_cdf().shift(&ratio(-3, 4))));
        assert_eq!(distribution_function(&fix_d_measure(), &int(-5)).unwrap(), fixtures::fix_d_cdf());
        assert_eq!(
            distribution_function(&PiecewiseMeasure::zero(unit()).unwrap(), &ratio(1, 2)),
            Err(Error::ZeroMeasure)
        );
        let u = PiecewiseMeasure::lebesgue(unit()).unwrap();
        assert!(matches!(distribution_function(&u, &int(2)), Err(Error::AnchorOutsideCarrier(_))));
    }

    #[test]
    fn decomposition_examples() {
        let (abs, sing) = lebesgue_decompose(&fix_d_measure());
        assert_eq!(abs.pieces(), &[UniformPiece::new(unit(), ratio(1, 2))]);
        assert!(abs.atoms().is_empty());
        assert_eq!(sing.atoms(), &[Atom::new(ratio(1, 2), ratio(1, 2))]);
        assert_eq!(abs.add(&sing).unwrap(), fix_d_measure());
        let (abs, sing) = lebesgue_decompose(&dirac());
        assert!(abs.is_zero());
        assert_eq!(sing, dirac());
    }

    #[test]
    fn density_examples() {
        let d = density(&fix_a_measure()).unwrap();
        assert_eq!(d.knots(), &[int(0), ratio(1, 2), ratio(3, 2), int(2)]);
        assert_eq!(d.values(), &[int(0), int(1), int(0), int(1), int(0)]);
        assert_eq!(density(&dirac()), Err(Error::NotAbsolutelyContinuous));
        let leb = PiecewiseMeasure::lebesgue(Interval::real_line()).unwrap();
        assert_eq!(density(&leb).unwrap(), StepFunction::constant(Interval::real_line(), int(1)).unwrap());
    }

    #[test]
    fn pushforward_examples() {
        let lam = PiecewiseMeasure::lebesgue(unit()).unwrap();
        assert_eq!(pushforward(&lam, &fixtures::fix_a_qf()).unwrap(), fix_a_measure());
        let qd = fixtures::fix_d_cdf().generalized_inverse().unwrap();
        assert_eq!(pushforward(&lam, &qd).unwrap(), fix_d_measure());
        let u = associated_measure(&fixtures::fix_b_cdf());
        let id = PiecewiseMonotone::identity(Interval::real_line()).unwrap();
        assert_eq!(pushforward(&u, &id).unwrap(), u);
        let atom = PiecewiseMeasure::new(unit(), vec![Atom::new(ratio(1, 2), int(1))], vec![]).unwrap();
        assert!(matches!(pushforward(&atom, &fixtures::fix_a_qf()), Err(Error::VersionAmbiguous(_))));
    }

    #[test]
    fn lebesgue_restricted_examples() {
        let q = fixtures::fix_a_qf();
        assert_eq!(lebesgue_restricted(&q).unwrap(), PiecewiseMeasure::lebesgue(unit()).unwrap());
        assert!(lebesgue_restricted(&fixtures::fix_c_cdf()).unwrap().is_zero());
        let id = PiecewiseMonotone::identity(Interval::real_line()).unwrap();
        assert_eq!(lebesgue_restricted(&id).unwrap(), PiecewiseMeasure::lebesgue(Interval::real_line()).unwrap());
    }

    #[test]
    fn abs_cont_examples() {
        let on_02 =
            PiecewiseMeasure::lebesgue_on(Interval::real_line(), &Interval::open_finite(int(0), int(2))).unwrap();
        assert!(!is_abs_cont_wrt(&on_02, &fix_a_measure()).unwrap());
        let (abs, _) = lebesgue_decompose(&fix_d_measure());
        let on_01 = PiecewiseMeasure::lebesgue_on(Interval::real_line(), &unit()).unwrap();
        assert!(is_abs_cont_wrt(&abs, &on_01).unwrap());
        let leb = PiecewiseMeasure::lebesgue(Interval::real_line()).unwrap();
        assert!(!is_abs_cont_wrt(&dirac(), &leb).unwrap());
        let elsewhere = PiecewiseMeasure::lebesgue(unit()).unwrap();
        assert!(matches!(is_abs_cont_wrt(&dirac(), &elsewhere), Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn gen_inverse_abs_cont_examples() {
        assert!(!gen_inverse_abs_cont(&fixtures::fix_a_cdf(), &unit()).unwrap());
        assert!(gen_inverse_abs_cont(&fixtures::fix_d_cdf(), &unit()).unwrap());
        assert!(gen_inverse_abs_cont(&fixtures::fix_c_cdf(), &unit()).unwrap());
    }

    #[test]
    fn inverse_rule_examples() {
        let r = inverse_rule_check(&fixtures::fix_b_cdf()).unwrap();
        assert!(r.holds());
        assert_eq!(r.segments.len(), 1);
        assert_eq!(r.segments[0].g_abs, int(1));

        let r = inverse_rule_check(&fixtures::fix_d_cdf()).unwrap();
        assert!(r.holds());
        assert!(r.segments.iter().all(|s| s.g_abs == ratio(1, 2) && s.h_prime_at_g == int(2)));

        let two = PiecewiseMonotone::from_pieces(
            unit(),
            vec![ratio(1, 2)],
            vec![Affine::new(int(1), int(0)), Affine::new(int(3), int(-1))],
        )
        .unwrap();
        let r = inverse_rule_check(&two).unwrap();
        let got: Vec<(Rational, Rational)> =
            r.segments.iter().map(|s| (s.g_abs.clone(), s.h_prime_at_g.clone())).collect();
        assert_eq!(got, vec![(int(1), int(1)), (int(3), ratio(1, 3))]);

        assert!(matches!(inverse_rule_check(&fixtures::fix_a_cdf()), Err(Error::PreconditionFailed(_))));
    }
}
