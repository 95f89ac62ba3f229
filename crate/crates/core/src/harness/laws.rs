//! One exact check per theorem. Each returns pass, skip (precondition not
//! met) or a failure with what was expected and what was found.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::measure::{
    associated_measure, decompose_wrt_lebesgue_on, gen_inverse_abs_cont, inverse_rule_check, is_abs_cont_wrt,
    lebesgue_restricted, pushforward,
};
use crate::monotone::{refine, PiecewiseMonotone, Version};
use crate::number::{ExtendedReal, Rational};
use crate::unimodal::{cdf_unimodal, classify, is_quasi_convex, qf_shape_check, quantile_density, quantile_function};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Law {
    #[serde(rename = "GALOIS")]
    Galois,
    #[serde(rename = "DOUBLE_INV")]
    DoubleInv,
    #[serde(rename = "PUSH_FWD")]
    PushFwd,
    #[serde(rename = "PUSH_CONT")]
    PushCont,
    #[serde(rename = "CONT_EQUIV")]
    ContEquiv,
    #[serde(rename = "RN_LEMMA")]
    RnLemma,
    #[serde(rename = "AC_EQUIV")]
    AcEquiv,
    #[serde(rename = "INV_RULE")]
    InvRule,
    #[serde(rename = "QF_AC")]
    QfAc,
    #[serde(rename = "MAIN_EQUIV")]
    MainEquiv,
    #[serde(rename = "DECOMP")]
    Decomp,
    #[serde(rename = "GEN_LOCFIN")]
    GenLocfin,
}

impl Law {
    pub const ALL: [Law; 12] = [
        Law::Galois,
        Law::DoubleInv,
        Law::PushFwd,
        Law::PushCont,
        Law::ContEquiv,
        Law::RnLemma,
        Law::AcEquiv,
        Law::InvRule,
        Law::QfAc,
        Law::MainEquiv,
        Law::Decomp,
        Law::GenLocfin,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Galois => "GALOIS",
            Law::DoubleInv => "DOUBLE_INV",
            Law::PushFwd => "PUSH_FWD",
            Law::PushCont => "PUSH_CONT",
            Law::ContEquiv => "CONT_EQUIV",
            Law::RnLemma => "RN_LEMMA",
            Law::AcEquiv => "AC_EQUIV",
            Law::InvRule => "INV_RULE",
            Law::QfAc => "QF_AC",
            Law::MainEquiv => "MAIN_EQUIV",
            Law::Decomp => "DECOMP",
            Law::GenLocfin => "GEN_LOCFIN",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        Law::ALL
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip,
    Fail { expected: String, got: String },
}

impl Outcome {
    fn expect<T: fmt::Debug + PartialEq>(what: &str, expected: T, got: T) -> Outcome {
        if expected == got {
            Outcome::Pass
        } else {
            Outcome::Fail { expected: format!("{what}: {expected:?}"), got: format!("{got:?}") }
        }
    }

    fn and(self, next: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
        match self {
            Outcome::Pass => next(),
            other => Ok(other),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

/// Runs one law on one instance. Library errors count as failures.
pub fn check(law: Law, g: &PiecewiseMonotone) -> Outcome {
    let result = match law {
        Law::Galois => galois(g),
        Law::DoubleInv => double_inverse(g),
        Law::PushFwd => push_forward(g),
        Law::PushCont => push_continuous(g),
        Law::ContEquiv => continuity_equivalence(g),
        Law::RnLemma => rn_lemma(g),
        Law::AcEquiv => ac_equivalence(g),
        Law::InvRule => inverse_rule(g),
        Law::QfAc => qf_absolutely_continuous(g),
        Law::MainEquiv => main_equivalence(g),
        Law::Decomp => decomposition(g),
        Law::GenLocfin => locally_finite(g),
    };
    result.unwrap_or_else(|e| Outcome::Fail { expected: "no error".into(), got: e.to_string() })
}

fn knots(g: &PiecewiseMonotone) -> Vec<Rational> {
    let mut k = g.cuts().to_vec();
    for end in [g.regular_domain().lo(), g.regular_domain().hi()] {
        if let Some(q) = end.finite() {
            k.push(q.clone());
        }
    }
    k
}

fn finite_values(points: &[ExtendedReal]) -> impl Iterator<Item = Rational> + '_ {
    points.iter().filter_map(|p| p.finite().cloned())
}

/// `G_l(x) > t <=> x > H_r(t)` and `G_l(x) <= t <=> x <= H_r(t)` on a grid
/// refining the knots of both functions and their images under each other.
fn galois(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let (gk, hk) = (knots(g), knots(&h));
    let g_at_knots: Vec<ExtendedReal> = gk.iter().map(|x| g.eval(x, Version::Left)).collect();
    let h_at_knots: Vec<ExtendedReal> = hk.iter().map(|t| h.eval(t, Version::Right)).collect();
    let xs = refine(gk.iter().cloned().chain(finite_values(&h_at_knots)).collect());
    let ts = refine(hk.iter().cloned().chain(finite_values(&g_at_knots)).collect());
    let gl: Vec<ExtendedReal> = xs.iter().map(|x| g.eval(x, Version::Left)).collect();
    let hr: Vec<ExtendedReal> = ts.iter().map(|t| h.eval(t, Version::Right)).collect();
    for (x, gx) in xs.iter().zip(&gl) {
        for (t, ht) in ts.iter().zip(&hr) {
            let lhs = gx.cmp_finite(t).is_gt();
            let rhs = ht.cmp_finite(x).is_lt();
            if lhs != rhs {
                return Ok(Outcome::Fail {
                    expected: format!("G_l({x}) > {t} iff {x} > H_r({t})"),
                    got: format!("G_l({x}) = {gx}, H_r({t}) = {ht}"),
                });
            }
            let lhs = gx.cmp_finite(t).is_le();
            let rhs = ht.cmp_finite(x).is_ge();
            if lhs != rhs {
                return Ok(Outcome::Fail {
                    expected: format!("G_l({x}) <= {t} iff {x} <= H_r({t})"),
                    got: format!("G_l({x}) = {gx}, H_r({t}) = {ht}"),
                });
            }
        }
    }
    Ok(Outcome::Pass)
}

fn double_inverse(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let hh = match h.generalized_inverse() {
        Err(Error::ConstantFunction) => return Ok(Outcome::Skip),
        other => other?,
    };
    Outcome::expect("inverse of inverse has the same versions", true, hh.versions_equal(g))
        .and(|| Ok(Outcome::expect("same class", true, &hh == g)))
}

/// Both directions of `H # lambda_H = mu_G`.
fn push_forward(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let forward = pushforward(&lebesgue_restricted(&h)?, &h)?;
    Outcome::expect("H # lambda_H = mu_G", associated_measure(g), forward).and(|| {
        let back = pushforward(&lebesgue_restricted(g)?, g)?;
        Ok(Outcome::expect("G # lambda_G = mu_H", associated_measure(&h), back))
    })
}

/// `H # mu_H = lambda_G` whenever the inverse is continuous.
fn push_continuous(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let continuous = h.jumps().is_empty();
    let strictly = g.strictly_increasing_on(&g.mass_interval()?);
    if continuous != strictly {
        return Ok(Outcome::Fail {
            expected: "inverse continuous iff strictly increasing on the mass interval".into(),
            got: format!("continuous = {continuous}, strictly increasing = {strictly}"),
        });
    }
    if !continuous {
        return Ok(Outcome::Skip);
    }
    let image = pushforward(&associated_measure(&h), &h)?;
    Ok(Outcome::expect("H # mu_H = lambda_G", lebesgue_restricted(g)?, image))
}

fn continuity_equivalence(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let mass = g.mass_interval()?;
    let continuous = h.jumps().is_empty();
    let strictly = g.strictly_increasing_on(&mass);
    // refined twice so that every segment holds at least two grid points
    let grid: Vec<Rational> = refine(refine(knots(g))).into_iter().filter(|x| mass.contains(x)).collect();
    let values: Vec<ExtendedReal> = grid.iter().map(|x| g.eval(x, Version::Left)).collect();
    let injective = values.windows(2).all(|w| w[0] < w[1]);
    if continuous != strictly || continuous != injective {
        return Ok(Outcome::Fail {
            expected: "continuity, strict increase and injectivity agree".into(),
            got: format!("{continuous}, {strictly}, {injective}"),
        });
    }
    if !continuous {
        return Ok(Outcome::Pass);
    }
    for (x, gx) in grid.iter().zip(&values) {
        let t = gx.finite().expect("inside the regular domain");
        for v in [Version::Left, Version::Right] {
            let back = h.eval(t, v);
            if back.cmp_finite(x).is_ne() {
                return Ok(Outcome::Fail { expected: format!("H(G({x})) = {x}"), got: back.to_string() });
            }
        }
    }
    let image = Interval::open(h.range_lo(), h.range_hi());
    Ok(Outcome::expect("M_G is the interior of the image of H", g.preimage_interior(h.regular_domain()), image))
}

/// Lebesgue decomposition against `rho = lambda|M_G`.
fn rn_lemma(g: &PiecewiseMonotone) -> Result<Outcome> {
    let mu = associated_measure(g);
    let mass = g.mass_interval()?;
    let rho = lebesgue_restricted(g)?;
    let (abs, rest) = decompose_wrt_lebesgue_on(&mu, &mass);
    let first = Outcome::expect("mu << rho iff singular part vanishes", rest.is_zero(), is_abs_cont_wrt(&mu, &rho)?);
    first.and(|| {
        let density = abs.abs_density();
        let positive =
            density.segments().all(|(seg, v)| seg.intersect(&mass).is_empty() || v > &Rational::from_integer(0.into()));
        Ok(Outcome::expect("rho << mu_abs iff density positive on M", positive, is_abs_cont_wrt(&rho, &abs)?))
    })
}

/// The three characterisations agree on the whole regular domain of the
/// inverse and on subintervals between its knots.
fn ac_equivalence(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    let dom = h.regular_domain().clone();
    let mut ends: Vec<ExtendedReal> = vec![dom.lo().clone(), dom.hi().clone()];
    ends.extend(refine(knots(&h)).into_iter().filter(|t| dom.contains(t)).map(ExtendedReal::from));
    ends.sort();
    ends.dedup();
    let step = (ends.len() / 4).max(1);
    let picks: Vec<&ExtendedReal> = ends.iter().step_by(step).chain(ends.last()).collect();
    let mut intervals = vec![dom.clone()];
    for (i, a) in picks.iter().enumerate() {
        for b in &picks[i + 1..] {
            intervals.push(Interval::open((*a).clone(), (*b).clone()));
        }
    }
    for iv in intervals.iter().filter(|iv| !iv.is_empty()) {
        gen_inverse_abs_cont(g, iv)?;
    }
    Ok(Outcome::Pass)
}

fn inverse_rule(g: &PiecewiseMonotone) -> Result<Outcome> {
    let h = g.generalized_inverse()?;
    if !gen_inverse_abs_cont(g, h.regular_domain())? {
        return Ok(Outcome::Skip);
    }
    let report = inverse_rule_check(g)?;
    match report.segments.iter().find(|s| !s.holds) {
        None => Ok(Outcome::Pass),
        Some(s) => Ok(Outcome::Fail {
            expected: format!("g_abs * (h' o G) = 1 on {}", s.interval),
            got: format!("{} * {}", s.g_abs, s.h_prime_at_g),
        }),
    }
}

fn qf_absolutely_continuous(g: &PiecewiseMonotone) -> Result<Outcome> {
    if !cdf_unimodal(g).0 {
        return Ok(Outcome::Skip);
    }
    let q = quantile_function(g)?;
    Ok(Outcome::expect("no jumps of the quantile function", Vec::new(), q.jumps()))
}

/// Three independent routes to CDF-unimodality.
fn main_equivalence(g: &PiecewiseMonotone) -> Result<Outcome> {
    let (by_cdf, _) = cdf_unimodal(g);
    let (by_density, density_modes) = match quantile_density(g) {
        Ok(qd) => is_quasi_convex(&qd),
        Err(Error::QfNotAbsolutelyContinuous(_)) => (false, None),
        Err(e) => return Err(e),
    };
    let (by_shape, alphas) = qf_shape_check(&quantile_function(g)?);
    if by_cdf != by_density || by_cdf != by_shape {
        return Ok(Outcome::Fail {
            expected: "CDF-unimodal = quasi-convex quantile density = concave-convex QF".into(),
            got: format!("{by_cdf}, {by_density}, {by_shape}"),
        });
    }
    classify(g)?;
    Ok(Outcome::expect("quantile modal interval", alphas, density_modes))
}

/// CDF-unimodal iff the density is quasi-concave and the singular part is
/// at most one atom, sitting in the density's modal interval.
fn decomposition(g: &PiecewiseMonotone) -> Result<Outcome> {
    let c = classify(g)?;
    let jumps = g.jumps();
    let atom_ok = match jumps.as_slice() {
        [] => true,
        [(x, _)] => c.dens_modes.as_ref().is_some_and(|m| m.contains(x)),
        _ => false,
    };
    let rhs = c.dens_unimodal_abs_part && atom_ok;
    Ok(Outcome::expect("CDF-unimodal iff quasi-concave density plus an atom at a mode", c.cdf_unimodal, rhs))
}

fn locally_finite(g: &PiecewiseMonotone) -> Result<Outcome> {
    for law in [Law::Galois, Law::DoubleInv, Law::PushFwd, Law::InvRule, Law::QfAc, Law::MainEquiv, Law::Decomp] {
        let outcome = check(law, g);
        if outcome.is_fail() {
            return Ok(outcome);
        }
    }
    Ok(Outcome::Pass)
}
