//! Random piecewise-monotone instances.

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::interval::Interval;
use crate::monotone::{Affine, PiecewiseMonotone};
use crate::number::{int, ratio, ExtendedReal, Rational};
use crate::repr::{rational_string, rational_strings};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    /// Maximum number of affine pieces.
    pub max_knots: usize,
    pub allow_jumps: bool,
    pub allow_flats: bool,
    pub allow_infinite_domain: bool,
    pub force_unimodal: bool,
    /// Bound on numerators and denominators of generated rationals.
    pub value_bound: Rational,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_knots: 12,
            allow_jumps: true,
            allow_flats: true,
            allow_infinite_domain: true,
            force_unimodal: false,
            value_bound: int(1000),
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> Self {
        GenConfig { seed, ..GenConfig::default() }
    }
}

/// The raw ingredients of an instance, kept so that shrinking can edit them.
///
/// The function has `slopes.len()` pieces separated by `cuts`; it jumps by
/// `jumps[i]` at `cuts[i]`, and its first piece passes through `base` at the
/// first cut (or at the anchor of the domain when there are no cuts).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceSpec {
    #[serde(with = "opt_rational")]
    pub lo: Option<Rational>,
    #[serde(with = "opt_rational")]
    pub hi: Option<Rational>,
    #[serde(with = "rational_strings")]
    pub cuts: Vec<Rational>,
    #[serde(with = "rational_strings")]
    pub jumps: Vec<Rational>,
    #[serde(with = "rational_strings")]
    pub slopes: Vec<Rational>,
    #[serde(with = "rational_string")]
    pub base: Rational,
}

mod opt_rational {
    use super::*;
    use crate::number::{format_rational, parse_rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| parse_rational(&s).map_err(serde::de::Error::custom)).transpose()
    }
}

impl InstanceSpec {
    pub fn domain(&self) -> Interval {
        let lo = self.lo.clone().map_or(ExtendedReal::NegInf, ExtendedReal::Finite);
        let hi = self.hi.clone().map_or(ExtendedReal::PosInf, ExtendedReal::Finite);
        Interval::open(lo, hi)
    }

    fn anchor(&self) -> Rational {
        if let Some(c) = self.cuts.first() {
            return c.clone();
        }
        crate::step::probe(self.domain().lo(), self.domain().hi())
    }

    pub fn build(&self) -> Result<PiecewiseMonotone> {
        let mut pieces = Vec::with_capacity(self.slopes.len());
        pieces.push(Affine::through(&self.anchor(), &self.base, self.slopes[0].clone()));
        for (i, c) in self.cuts.iter().enumerate() {
            let left = pieces[i].at(c);
            pieces.push(Affine::through(c, &(left + &self.jumps[i]), self.slopes[i + 1].clone()));
        }
        PiecewiseMonotone::from_pieces(self.domain(), self.cuts.clone(), pieces)
    }

    /// No mass at all: every slope zero and no jump.
    pub fn is_degenerate(&self) -> bool {
        self.slopes.iter().all(Zero::is_zero) && self.jumps.iter().all(Zero::is_zero)
    }

    pub fn within_bound(&self, bound: &Rational) -> bool {
        let ok = |q: &Rational| {
            let b = bound.to_integer();
            q.numer().abs() <= b && *q.denom() <= b
        };
        self.lo.iter().chain(&self.hi).chain(&self.cuts).chain(&self.jumps).chain(&self.slopes).all(ok)
            && ok(&self.base)
    }
}

/// Per-instance generator: stream `index` of the configured seed.
pub fn rng_for(cfg: &GenConfig, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    rng
}

fn small_rational(rng: &mut ChaCha8Rng, max_num: i64) -> Rational {
    let den = *[1i64, 1, 2, 3, 4, 5].choose(rng).expect("nonempty");
    ratio(rng.gen_range(1..=max_num), den)
}

fn slope(rng: &mut ChaCha8Rng, allow_zero: bool) -> Rational {
    if allow_zero && rng.gen_bool(0.25) {
        return Rational::zero();
    }
    small_rational(rng, 6)
}

#[derive(Clone, Copy)]
enum Shape {
    Arbitrary,
    Unimodal,
    Perturbed,
}

/// A fresh instance spec honouring the flags. Degenerate draws are retried.
pub fn gen_spec(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> InstanceSpec {
    loop {
        let spec = draw(cfg, rng);
        if !spec.is_degenerate() && spec.within_bound(&cfg.value_bound) && spec.build().is_ok() {
            return spec;
        }
    }
}

pub fn gen_monotone(cfg: &GenConfig) -> PiecewiseMonotone {
    gen_spec(cfg, &mut rng_for(cfg, 0)).build().expect("generated specs build")
}

fn draw(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> InstanceSpec {
    let n = rng.gen_range(1..=cfg.max_knots.max(1));
    let mut cuts = Vec::with_capacity(n - 1);
    let mut x = ratio(rng.gen_range(-8..=8), *[1i64, 2, 4].choose(rng).expect("nonempty"));
    for _ in 0..n - 1 {
        cuts.push(x.clone());
        x += small_rational(rng, 3);
    }
    let (first, last) = match (cuts.first(), cuts.last()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => (x.clone(), x.clone()),
    };
    let infinite_lo = cfg.allow_infinite_domain && rng.gen_bool(0.5);
    let infinite_hi = cfg.allow_infinite_domain && rng.gen_bool(0.5);
    let lo = (!infinite_lo).then(|| &first - small_rational(rng, 2));
    let hi = (!infinite_hi).then(|| &last + small_rational(rng, 2));

    let shape = if cfg.force_unimodal {
        Shape::Unimodal
    } else {
        *[Shape::Arbitrary, Shape::Unimodal, Shape::Perturbed].choose(rng).expect("nonempty")
    };
    let mut slopes: Vec<Rational> = (0..n).map(|_| slope(rng, cfg.allow_flats)).collect();
    let mut jumps: Vec<Rational> = vec![Rational::zero(); n - 1];
    // flat tails towards infinite ends, as for distribution functions
    if cfg.allow_flats {
        if infinite_lo && rng.gen_bool(0.6) {
            slopes[0] = Rational::zero();
        }
        if infinite_hi && rng.gen_bool(0.6) {
            slopes[n - 1] = Rational::zero();
        }
    }
    match shape {
        Shape::Arbitrary => {
            if cfg.allow_jumps {
                for j in jumps.iter_mut() {
                    if rng.gen_bool(0.3) {
                        *j = small_rational(rng, 4);
                    }
                }
            }
        }
        Shape::Unimodal | Shape::Perturbed => {
            let split = rng.gen_range(0..=n);
            slopes[..split].sort();
            slopes[split..].sort_by(|a, b| b.cmp(a));
            if cfg.allow_jumps && split > 0 && split < n && rng.gen_bool(0.5) {
                jumps[split - 1] = small_rational(rng, 4);
            }
            if matches!(shape, Shape::Perturbed) && n > 1 {
                match rng.gen_range(0..3) {
                    0 => {
                        let i = rng.gen_range(0..n - 1);
                        slopes.swap(i, i + 1);
                    }
                    1 if cfg.allow_jumps => {
                        let i = rng.gen_range(0..n - 1);
                        jumps[i] = small_rational(rng, 4);
                    }
                    _ => {
                        let i = rng.gen_range(0..n);
                        slopes[i] = slope(rng, cfg.allow_flats);
                    }
                }
            }
        }
    }
    let base = ratio(rng.gen_range(-10..=10), *[1i64, 2, 3].choose(rng).expect("nonempty"));
    InstanceSpec { lo, hi, cuts, jumps, slopes, base }
}

/// Instances with regular domain `R` and infinite mass towards both ends:
/// unbounded, strictly increasing tails. The identity comes first.
pub fn gen_locally_finite(cfg: &GenConfig, rng: &mut ChaCha8Rng, index: u64) -> InstanceSpec {
    if index == 0 {
        return InstanceSpec {
            lo: None,
            hi: None,
            cuts: Vec::new(),
            jumps: Vec::new(),
            slopes: vec![int(1)],
            base: Rational::zero(),
        };
    }
    let cfg = GenConfig { allow_infinite_domain: false, ..cfg.clone() };
    loop {
        let mut spec = draw(&cfg, rng);
        spec.lo = None;
        spec.hi = None;
        let n = spec.slopes.len();
        if spec.slopes[0].is_zero() {
            spec.slopes[0] = small_rational(rng, 6);
        }
        if spec.slopes[n - 1].is_zero() {
            spec.slopes[n - 1] = small_rational(rng, 6);
        }
        if spec.within_bound(&cfg.value_bound) && spec.build().is_ok() {
            return spec;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unimodal::classify;

    #[test]
    fn smallest_instance_is_one_increasing_segment() {
        let cfg = GenConfig { seed: 1, max_knots: 1, allow_jumps: false, allow_flats: false, ..GenConfig::default() };
        let g = gen_monotone(&cfg);
        assert!(g.cuts().is_empty());
        assert!(g.slopes()[0].is_positive());
    }

    #[test]
    fn forced_unimodal_instances_are_unimodal() {
        let cfg = GenConfig { force_unimodal: true, ..GenConfig::with_seed(7) };
        for i in 0..300 {
            let g = gen_spec(&cfg, &mut rng_for(&cfg, i)).build().unwrap();
            assert!(classify(&g).unwrap().cdf_unimodal, "instance {i}");
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let cfg = GenConfig::with_seed(99);
        assert_eq!(gen_monotone(&cfg), gen_monotone(&cfg));
        let a = gen_spec(&cfg, &mut rng_for(&cfg, 5));
        let b = gen_spec(&cfg, &mut rng_for(&cfg, 5));
        assert_eq!(a, b);
    }

    #[test]
    fn spec_serializes_with_string_numbers() {
        let cfg = GenConfig::with_seed(3);
        let spec = gen_spec(&cfg, &mut rng_for(&cfg, 0));
        let json = serde_json::to_string(&spec).unwrap();
        let back: InstanceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
}
