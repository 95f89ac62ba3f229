//! Non-decreasing, piecewise-affine functions of the extended real line.
//!
//! A [`PiecewiseMonotone`] stores the class `[G]` of a non-decreasing
//! function: its regular domain `I` (an open interval), the cut points inside
//! `I`, and one affine piece per open segment. Nothing is stored *at* a cut,
//! so the left and right versions `G_l`, `G_r` are the only observable
//! values. Outside `I` the function is embedded as `-inf` on the left and
//! `+inf` on the right.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::number::{int, midpoint, ExtendedReal, Rational};

/// `x -> slope * x + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Affine {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Affine { slope, intercept }
    }

    pub fn constant(c: Rational) -> Self {
        Affine { slope: Rational::zero(), intercept: c }
    }

    /// The affine piece with the given slope through `(x, y)`.
    pub fn through(x: &Rational, y: &Rational, slope: Rational) -> Self {
        let intercept = y - &slope * x;
        Affine { slope, intercept }
    }

    pub fn at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    /// Value at an extended point, reading an infinite argument as a limit.
    pub fn at_ext(&self, x: &ExtendedReal) -> ExtendedReal {
        match x {
            ExtendedReal::Finite(x) => ExtendedReal::Finite(self.at(x)),
            ExtendedReal::NegInf if self.slope.is_zero() => self.intercept.clone().into(),
            ExtendedReal::NegInf => ExtendedReal::NegInf,
            ExtendedReal::PosInf if self.slope.is_zero() => self.intercept.clone().into(),
            ExtendedReal::PosInf => ExtendedReal::PosInf,
        }
    }

    /// Inverse of a strictly increasing piece.
    fn inverse(&self) -> Affine {
        let slope = self.slope.recip();
        let intercept = -&self.intercept / &self.slope;
        Affine { slope, intercept }
    }

    fn is_flat(&self) -> bool {
        self.slope.is_zero()
    }
}

/// Which member of the class to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Version {
    /// `G_l(x) = G(x-)`, left-continuous.
    Left,
    /// `G_r(x) = G(x+)`, right-continuous.
    Right,
}

/// A cut point with its one-sided limits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Breakpoint {
    pub x: Rational,
    pub left_limit: Rational,
    pub right_limit: Rational,
}

impl Breakpoint {
    pub fn new(x: Rational, left_limit: Rational, right_limit: Rational) -> Self {
        Breakpoint { x, left_limit, right_limit }
    }

    pub fn continuous(x: Rational, value: Rational) -> Self {
        Breakpoint { left_limit: value.clone(), right_limit: value, x }
    }

    pub fn is_jump(&self) -> bool {
        self.left_limit < self.right_limit
    }
}

/// The class `[G]` of a non-decreasing piecewise-affine function.
///
/// Always stored in canonical form: a cut is kept only where the function
/// jumps or changes slope. Structural equality is therefore class equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseMonotone {
    domain: Interval,
    cuts: Vec<Rational>,
    pieces: Vec<Affine>,
}

impl PiecewiseMonotone {
    /// Builds from cut points and one affine piece per segment.
    pub fn from_pieces(domain: Interval, cuts: Vec<Rational>, pieces: Vec<Affine>) -> Result<Self> {
        if domain.is_empty() {
            return Err(Error::EmptyInterval);
        }
        if !domain.is_open() {
            return Err(Error::InvalidInterval(format!("regular domain {domain} must be open")));
        }
        if pieces.len() != cuts.len() + 1 {
            return Err(Error::AffineMismatch(format!(
                "{} cuts need {} pieces, got {}",
                cuts.len(),
                cuts.len() + 1,
                pieces.len()
            )));
        }
        for (i, c) in cuts.iter().enumerate() {
            if !domain.contains(c) {
                return Err(Error::UnorderedBreakpoints(format!("{c} is not inside {domain}")));
            }
            if i > 0 && cuts[i - 1] >= *c {
                return Err(Error::UnorderedBreakpoints(format!("{} is not below {c}", cuts[i - 1])));
            }
        }
        for p in &pieces {
            if p.slope.is_negative() {
                return Err(Error::NonMonotone(format!("slope {} < 0", p.slope)));
            }
        }
        for (i, c) in cuts.iter().enumerate() {
            let l = pieces[i].at(c);
            let r = pieces[i + 1].at(c);
            if l > r {
                return Err(Error::NonMonotone(format!("drop from {l} to {r} at {c}")));
            }
        }
        let g = PiecewiseMonotone { domain, cuts, pieces }.canonical();
        if g.pieces.len() == 1 && g.pieces[0].is_flat() && g.domain == Interval::real_line() {
            return Err(Error::ConstantFunction);
        }
        Ok(g)
    }

    /// Builds from breakpoints (with their limits) and per-segment slopes.
    ///
    /// Needs at least one breakpoint to pin the vertical position; use
    /// [`PiecewiseMonotone::from_pieces`] or [`PiecewiseMonotone::affine`]
    /// for a single piece.
    pub fn from_breakpoints(domain: Interval, breakpoints: Vec<Breakpoint>, slopes: Vec<Rational>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::AffineMismatch("no breakpoint to anchor the pieces".into()));
        }
        if slopes.len() != breakpoints.len() + 1 {
            return Err(Error::AffineMismatch(format!(
                "{} breakpoints need {} slopes, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                slopes.len()
            )));
        }
        for bp in &breakpoints {
            if bp.left_limit > bp.right_limit {
                return Err(Error::NonMonotone(format!(
                    "left limit {} exceeds right limit {} at {}",
                    bp.left_limit, bp.right_limit, bp.x
                )));
            }
        }
        let mut pieces = Vec::with_capacity(slopes.len());
        pieces.push(Affine::through(&breakpoints[0].x, &breakpoints[0].left_limit, slopes[0].clone()));
        for (i, bp) in breakpoints.iter().enumerate() {
            let piece = Affine::through(&bp.x, &bp.right_limit, slopes[i + 1].clone());
            if let Some(next) = breakpoints.get(i + 1) {
                if next.x > bp.x && piece.at(&next.x) != next.left_limit {
                    return Err(Error::AffineMismatch(format!(
                        "segment ({}, {}) with slope {} reaches {}, not {}",
                        bp.x,
                        next.x,
                        slopes[i + 1],
                        piece.at(&next.x),
                        next.left_limit
                    )));
                }
            }
            pieces.push(piece);
        }
        let cuts = breakpoints.into_iter().map(|bp| bp.x).collect();
        PiecewiseMonotone::from_pieces(domain, cuts, pieces)
    }

    /// A single affine piece on `domain`.
    pub fn affine(domain: Interval, slope: Rational, intercept: Rational) -> Result<Self> {
        PiecewiseMonotone::from_pieces(domain, Vec::new(), vec![Affine::new(slope, intercept)])
    }

    pub fn identity(domain: Interval) -> Result<Self> {
        PiecewiseMonotone::affine(domain, int(1), int(0))
    }

    fn canonical(mut self) -> Self {
        let mut cuts = Vec::with_capacity(self.cuts.len());
        let mut pieces = Vec::with_capacity(self.pieces.len());
        let mut iter = self.pieces.drain(..);
        pieces.push(iter.next().expect("at least one piece"));
        for (cut, piece) in self.cuts.drain(..).zip(iter) {
            if pieces.last() == Some(&piece) {
                continue;
            }
            cuts.push(cut);
            pieces.push(piece);
        }
        PiecewiseMonotone { domain: self.domain, cuts, pieces }
    }

    /// The regular domain `I_G`, where the function is real-valued.
    pub fn regular_domain(&self) -> &Interval {
        &self.domain
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn pieces(&self) -> &[Affine] {
        &self.pieces
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.pieces.iter().map(|p| p.slope.clone()).collect()
    }

    pub fn breakpoints(&self) -> Vec<Breakpoint> {
        self.cuts
            .iter()
            .enumerate()
            .map(|(i, c)| Breakpoint::new(c.clone(), self.pieces[i].at(c), self.pieces[i + 1].at(c)))
            .collect()
    }

    /// Cut points where the function jumps, with the jump height.
    pub fn jumps(&self) -> Vec<(Rational, Rational)> {
        self.breakpoints()
            .into_iter()
            .filter(Breakpoint::is_jump)
            .map(|bp| {
                let h = &bp.right_limit - &bp.left_limit;
                (bp.x, h)
            })
            .collect()
    }

    /// Number of open segments (`cuts + 1`).
    pub fn segment_count(&self) -> usize {
        self.pieces.len()
    }

    /// Bounds of segment `i` as extended reals.
    pub fn segment(&self, i: usize) -> (ExtendedReal, ExtendedReal) {
        let lo = if i == 0 { self.domain.lo().clone() } else { self.cuts[i - 1].clone().into() };
        let hi = if i == self.cuts.len() { self.domain.hi().clone() } else { self.cuts[i].clone().into() };
        (lo, hi)
    }

    /// Index of the segment containing `x`, or `Err(i)` if `x` is cut `i`.
    fn locate(&self, x: &Rational) -> std::result::Result<usize, usize> {
        match self.cuts.binary_search(x) {
            Ok(i) => Err(i),
            Err(i) => Ok(i),
        }
    }

    /// Evaluates the left or right version at a real point.
    pub fn eval(&self, x: &Rational, version: Version) -> ExtendedReal {
        match self.domain.lo().cmp_finite(x) {
            Ordering::Greater => return ExtendedReal::NegInf,
            Ordering::Equal => {
                return match version {
                    Version::Left => ExtendedReal::NegInf,
                    Version::Right => self.pieces[0].at(x).into(),
                }
            }
            Ordering::Less => {}
        }
        match self.domain.hi().cmp_finite(x) {
            Ordering::Less => return ExtendedReal::PosInf,
            Ordering::Equal => {
                return match version {
                    Version::Left => self.pieces[self.pieces.len() - 1].at(x).into(),
                    Version::Right => ExtendedReal::PosInf,
                }
            }
            Ordering::Greater => {}
        }
        match self.locate(x) {
            Ok(i) => self.pieces[i].at(x).into(),
            Err(i) => match version {
                Version::Left => self.pieces[i].at(x).into(),
                Version::Right => self.pieces[i + 1].at(x).into(),
            },
        }
    }

    /// `lim_{x -> -inf} G(x)` of the embedded function.
    pub fn limit_at_neg_inf(&self) -> ExtendedReal {
        if self.domain.lo().is_finite() {
            ExtendedReal::NegInf
        } else {
            self.pieces[0].at_ext(&ExtendedReal::NegInf)
        }
    }

    /// `lim_{x -> +inf} G(x)` of the embedded function.
    pub fn limit_at_pos_inf(&self) -> ExtendedReal {
        if self.domain.hi().is_finite() {
            ExtendedReal::PosInf
        } else {
            self.pieces[self.pieces.len() - 1].at_ext(&ExtendedReal::PosInf)
        }
    }

    /// `G(t+)`, also for `t = -inf` (the limit there).
    pub fn right_limit_at(&self, t: &ExtendedReal) -> ExtendedReal {
        match t {
            ExtendedReal::NegInf => self.limit_at_neg_inf(),
            ExtendedReal::Finite(t) => self.eval(t, Version::Right),
            ExtendedReal::PosInf => ExtendedReal::PosInf,
        }
    }

    /// `G(t-)`, also for `t = +inf` (the limit there).
    pub fn left_limit_at(&self, t: &ExtendedReal) -> ExtendedReal {
        match t {
            ExtendedReal::NegInf => ExtendedReal::NegInf,
            ExtendedReal::Finite(t) => self.eval(t, Version::Left),
            ExtendedReal::PosInf => self.limit_at_pos_inf(),
        }
    }

    /// `inf` of the real values, i.e. `G(inf I_G +)`.
    pub fn range_lo(&self) -> ExtendedReal {
        self.pieces[0].at_ext(self.domain.lo())
    }

    /// `sup` of the real values, i.e. `G(sup I_G -)`.
    pub fn range_hi(&self) -> ExtendedReal {
        self.pieces[self.pieces.len() - 1].at_ext(self.domain.hi())
    }

    /// Adds a constant to every value.
    pub fn shift(&self, c: &Rational) -> PiecewiseMonotone {
        let pieces = self.pieces.iter().map(|p| Affine::new(p.slope.clone(), &p.intercept + c)).collect();
        PiecewiseMonotone { domain: self.domain.clone(), cuts: self.cuts.clone(), pieces }
    }

    /// The class `[H]` of generalized inverses.
    ///
    /// The complete graph of `G` (vertical segments filled in at jumps and at
    /// finite ends of the regular domain) is walked once and reflected:
    /// increasing pieces invert, jumps become flats, flats become jumps.
    pub fn generalized_inverse(&self) -> Result<PiecewiseMonotone> {
        // (t_start, t_end, piece of H) in increasing t order, contiguous.
        let mut segs: Vec<(ExtendedReal, ExtendedReal, Affine)> = Vec::new();
        if let ExtendedReal::Finite(lo) = self.domain.lo() {
            let v = self.pieces[0].at(lo);
            segs.push((ExtendedReal::NegInf, v.into(), Affine::constant(lo.clone())));
        }
        for (i, piece) in self.pieces.iter().enumerate() {
            if !piece.is_flat() {
                let (p, q) = self.segment(i);
                segs.push((piece.at_ext(&p), piece.at_ext(&q), piece.inverse()));
            }
            if let Some(c) = self.cuts.get(i) {
                let l = piece.at(c);
                let r = self.pieces[i + 1].at(c);
                if l < r {
                    segs.push((l.into(), r.into(), Affine::constant(c.clone())));
                }
            }
        }
        if let ExtendedReal::Finite(hi) = self.domain.hi() {
            let v = self.pieces[self.pieces.len() - 1].at(hi);
            segs.push((v.into(), ExtendedReal::PosInf, Affine::constant(hi.clone())));
        }
        if segs.is_empty() {
            return Err(Error::ConstantFunction);
        }
        let domain = Interval::open(segs[0].0.clone(), segs[segs.len() - 1].1.clone());
        let mut cuts = Vec::with_capacity(segs.len() - 1);
        for w in segs.windows(2) {
            debug_assert_eq!(w[0].1, w[1].0, "inverse segments must be contiguous");
            match &w[1].0 {
                ExtendedReal::Finite(t) => cuts.push(t.clone()),
                other => return Err(Error::InternalInconsistency(format!("inner cut at {other}"))),
            }
        }
        let pieces = segs.into_iter().map(|s| s.2).collect();
        PiecewiseMonotone::from_pieces(domain, cuts, pieces)
    }

    /// `M_G = int(G^{-1}(I_H))`, computed as the range of the inverse.
    pub fn mass_interval(&self) -> Result<Interval> {
        let h = self.generalized_inverse()?;
        Ok(Interval::open(h.range_lo(), h.range_hi()))
    }

    /// `S_G = [inf H(M_H), sup H(M_H)]`, the convex hull of the support of `mu_G`.
    pub fn supporting_interval(&self) -> Result<Interval> {
        let inner = Interval::open(self.range_lo(), self.range_hi());
        if inner.is_empty() {
            return Ok(Interval::empty());
        }
        let h = self.generalized_inverse()?;
        Ok(Interval::closed(h.right_limit_at(inner.lo()), h.left_limit_at(inner.hi())))
    }

    /// `inf { x : G(x) > a }`, clipped to the regular domain.
    fn first_exceeding(&self, a: &ExtendedReal) -> ExtendedReal {
        let a = match a {
            ExtendedReal::NegInf => return self.domain.lo().clone(),
            ExtendedReal::PosInf => return self.domain.hi().clone(),
            ExtendedReal::Finite(a) => a,
        };
        for (i, piece) in self.pieces.iter().enumerate() {
            let (p, q) = self.segment(i);
            if piece.at_ext(&p).cmp_finite(a) == Ordering::Greater {
                return p;
            }
            if !piece.is_flat() {
                let x = (a - &piece.intercept) / &piece.slope;
                if q.cmp_finite(&x) == Ordering::Greater {
                    return x.into();
                }
            }
        }
        self.domain.hi().clone()
    }

    /// `sup { x : G(x) < b }`, clipped to the regular domain.
    fn last_below(&self, b: &ExtendedReal) -> ExtendedReal {
        let b = match b {
            ExtendedReal::PosInf => return self.domain.hi().clone(),
            ExtendedReal::NegInf => return self.domain.lo().clone(),
            ExtendedReal::Finite(b) => b,
        };
        for (i, piece) in self.pieces.iter().enumerate().rev() {
            let (p, q) = self.segment(i);
            if piece.at_ext(&q).cmp_finite(b) == Ordering::Less {
                return q;
            }
            if !piece.is_flat() {
                let x = (b - &piece.intercept) / &piece.slope;
                if p.cmp_finite(&x) == Ordering::Less {
                    return x.into();
                }
            }
        }
        self.domain.lo().clone()
    }

    /// `int(G^{-1}(J))` for an open interval `J`, computed on `G` alone.
    pub fn preimage_interior(&self, target: &Interval) -> Interval {
        if target.is_empty() {
            return Interval::empty();
        }
        Interval::open(self.first_exceeding(target.lo()), self.last_below(target.hi()))
    }

    /// Restriction to an open subinterval, re-embedded with `-inf`/`+inf`
    /// outside it.
    pub fn restrict(&self, to: &Interval) -> Result<PiecewiseMonotone> {
        if to.is_empty() {
            return Err(Error::EmptyInterval);
        }
        if !to.is_open() || !to.is_subset_of(&self.domain) {
            return Err(Error::InvalidInterval(format!("{to} is not an open subinterval of {}", self.domain)));
        }
        let first = self.cuts.iter().take_while(|c| to.lo().cmp_finite(c) != Ordering::Less).count();
        let last = self.cuts.iter().take_while(|c| to.hi().cmp_finite(c) == Ordering::Greater).count();
        let cuts = self.cuts[first..last].to_vec();
        let pieces = self.pieces[first..=last].to_vec();
        PiecewiseMonotone::from_pieces(to.clone(), cuts, pieces)
    }

    /// Class equality decided by evaluating both versions on a grid that
    /// refines the cuts of both functions.
    pub fn versions_equal(&self, other: &PiecewiseMonotone) -> bool {
        if self.domain != other.domain {
            return false;
        }
        let grid = merged_grid(&self.domain, [self.cuts.as_slice(), other.cuts.as_slice()]);
        grid.iter().all(|x| {
            self.eval(x, Version::Left) == other.eval(x, Version::Left)
                && self.eval(x, Version::Right) == other.eval(x, Version::Right)
        })
    }

    /// Maximal open intervals inside the mass interval on which `G` is
    /// constant. These are exactly the flats that turn into interior jumps
    /// of the generalized inverse; flat tails at the extreme values are
    /// not included.
    pub fn constancy_set(&self) -> Vec<Interval> {
        let mass = self.preimage_interior(&Interval::open(self.limit_at_neg_inf(), self.limit_at_pos_inf()));
        self.flats().iter().map(|f| f.intersect(&mass)).filter(|f| !f.is_empty()).collect()
    }

    /// All open segments on which the function is constant.
    pub fn flats(&self) -> Vec<Interval> {
        (0..self.pieces.len())
            .filter(|&i| self.pieces[i].is_flat())
            .map(|i| {
                let (p, q) = self.segment(i);
                Interval::open(p, q)
            })
            .collect()
    }

    /// No flat piece meets `within` in a set of positive length.
    pub fn strictly_increasing_on(&self, within: &Interval) -> bool {
        self.flats().iter().all(|f| f.intersect(within).is_empty())
    }

    /// No jump at any cut inside `within`.
    pub fn continuous_on(&self, within: &Interval) -> bool {
        self.jumps().iter().all(|(x, _)| !within.contains(x))
    }
}

/// Sorted evaluation grid: the given cuts inside `domain`, finite domain
/// ends, midpoints between consecutive points, and points 1 and 2 beyond the
/// extremes.
pub fn merged_grid<'a>(domain: &Interval, cut_sets: impl IntoIterator<Item = &'a [Rational]>) -> Vec<Rational> {
    let mut knots: Vec<Rational> = cut_sets.into_iter().flatten().cloned().collect();
    for end in [domain.lo(), domain.hi()] {
        if let ExtendedReal::Finite(q) = end {
            knots.push(q.clone());
        }
    }
    refine(knots)
}

/// Sorts, deduplicates, adds midpoints and two points beyond each extreme.
pub fn refine(mut knots: Vec<Rational>) -> Vec<Rational> {
    knots.sort();
    knots.dedup();
    if knots.is_empty() {
        knots.push(Rational::zero());
    }
    let mut grid = Vec::with_capacity(2 * knots.len() + 4);
    let first = knots[0].clone();
    let last = knots[knots.len() - 1].clone();
    grid.push(&first - int(2));
    grid.push(&first - int(1));
    for (i, k) in knots.iter().enumerate() {
        if i > 0 {
            grid.push(midpoint(&knots[i - 1], k));
        }
        grid.push(k.clone());
    }
    grid.push(&last + int(1));
    grid.push(&last + int(2));
    grid
}
