//! Greedy counterexample minimisation on instance specs.

use num_traits::{One, Zero};

use super::gen::InstanceSpec;
use crate::number::Rational;

const MAX_ROUNDS: usize = 200;

/// Repeatedly applies the first simplification that keeps `fails` true.
pub fn shrink(spec: &InstanceSpec, fails: impl Fn(&InstanceSpec) -> bool) -> InstanceSpec {
    let mut best = spec.clone();
    for _ in 0..MAX_ROUNDS {
        let next =
            candidates(&best).into_iter().find(|c| c != &best && !c.is_degenerate() && c.build().is_ok() && fails(c));
        match next {
            Some(c) => best = c,
            None => break,
        }
    }
    best
}

fn candidates(s: &InstanceSpec) -> Vec<InstanceSpec> {
    let mut out = Vec::new();
    for i in 0..s.cuts.len() {
        let mut c = s.clone();
        c.cuts.remove(i);
        c.jumps.remove(i);
        c.slopes.remove(i + 1);
        out.push(c);
        let mut c = s.clone();
        c.cuts.remove(i);
        c.jumps.remove(i);
        c.slopes.remove(i);
        out.push(c);
    }
    for i in 0..s.jumps.len() {
        if !s.jumps[i].is_zero() {
            let mut c = s.clone();
            c.jumps[i] = Rational::zero();
            out.push(c);
        }
    }
    for i in 0..s.slopes.len() {
        for v in [Rational::zero(), Rational::one()] {
            if s.slopes[i] != v {
                let mut c = s.clone();
                c.slopes[i] = v;
                out.push(c);
            }
        }
    }
    if !s.base.is_zero() {
        out.push(InstanceSpec { base: Rational::zero(), ..s.clone() });
    }
    if s.lo.is_some() {
        out.push(InstanceSpec { lo: None, ..s.clone() });
    }
    if s.hi.is_some() {
        out.push(InstanceSpec { hi: None, ..s.clone() });
    }
    let rounded: Vec<Rational> = s.cuts.iter().map(Rational::round).collect();
    if rounded != s.cuts && rounded.windows(2).all(|w| w[0] < w[1]) {
        let lo = s.lo.as_ref().map(|l| l.floor().min(rounded[0].clone() - Rational::one()));
        let hi = s.hi.as_ref().map(|h| h.ceil().max(rounded[rounded.len() - 1].clone() + Rational::one()));
        out.push(InstanceSpec { cuts: rounded, lo, hi, ..s.clone() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::int;

    #[test]
    fn shrinks_to_a_single_piece_when_anything_fails() {
        let spec = InstanceSpec {
            lo: Some(int(-3)),
            hi: None,
            cuts: vec![int(-1), int(0), int(2)],
            jumps: vec![int(1), int(0), int(2)],
            slopes: vec![int(2), int(0), int(3), int(1)],
            base: int(4),
        };
        let small = shrink(&spec, |_| true);
        assert_eq!(small.slopes.len(), 1);
        assert!(small.cuts.is_empty());
    }

    #[test]
    fn keeps_the_failure() {
        let spec = InstanceSpec {
            lo: None,
            hi: None,
            cuts: vec![int(0), int(1)],
            jumps: vec![int(1), int(1)],
            slopes: vec![int(0), int(1), int(0)],
            base: int(0),
        };
        // "fails" while there are at least two jumps
        let small = shrink(&spec, |s| s.jumps.iter().filter(|j| !j.is_zero()).count() >= 2);
        assert_eq!(small.jumps.len(), 2);
        assert!(small.jumps.iter().all(|j| !j.is_zero()));
    }
}
