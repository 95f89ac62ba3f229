//! Small reference functions used by the examples and tests.

use crate::interval::Interval;
use crate::monotone::{Affine, PiecewiseMonotone};
use crate::number::{int, ratio};
use crate::Result;

/// CDF of `lambda|(0,1/2) + lambda|(3/2,2)` on the real line.
pub fn fix_a_cdf() -> PiecewiseMonotone {
    PiecewiseMonotone::from_pieces(
        Interval::real_line(),
        vec![int(0), ratio(1, 2), ratio(3, 2), int(2)],
        vec![
            Affine::constant(int(0)),
            Affine::new(int(1), int(0)),
            Affine::constant(ratio(1, 2)),
            Affine::new(int(1), int(-1)),
            Affine::constant(int(1)),
        ],
    )
    .expect("valid fixture")
}

/// Quantile function of [`fix_a_cdf`]: `t` on `(0,1/2)`, `t+1` on `(1/2,1)`.
pub fn fix_a_qf() -> PiecewiseMonotone {
    PiecewiseMonotone::from_pieces(
        Interval::open_finite(int(0), int(1)),
        vec![ratio(1, 2)],
        vec![Affine::new(int(1), int(0)), Affine::new(int(1), int(1))],
    )
    .expect("valid fixture")
}

/// CDF of the uniform distribution on `(0,1)`, as a function on the real line.
pub fn fix_b_cdf() -> PiecewiseMonotone {
    PiecewiseMonotone::from_pieces(
        Interval::real_line(),
        vec![int(0), int(1)],
        vec![Affine::constant(int(0)), Affine::new(int(1), int(0)), Affine::constant(int(1))],
    )
    .expect("valid fixture")
}

/// The identity on `(0,1)`, embedded as `-inf` / `+inf` outside.
pub fn identity_unit() -> Result<PiecewiseMonotone> {
    PiecewiseMonotone::identity(Interval::open_finite(int(0), int(1)))
}

/// CDF of the unit point mass at 0.
pub fn fix_c_cdf() -> PiecewiseMonotone {
    PiecewiseMonotone::from_pieces(
        Interval::real_line(),
        vec![int(0)],
        vec![Affine::constant(int(0)), Affine::constant(int(1))],
    )
    .expect("valid fixture")
}

/// CDF of `U(0,1)/2 + delta_{1/2}/2`.
pub fn fix_d_cdf() -> PiecewiseMonotone {
    PiecewiseMonotone::from_pieces(
        Interval::real_line(),
        vec![int(0), ratio(1, 2), int(1)],
        vec![
            Affine::constant(int(0)),
            Affine::new(ratio(1, 2), int(0)),
            Affine::new(ratio(1, 2), ratio(1, 2)),
            Affine::constant(int(1)),
        ],
    )
    .expect("valid fixture")
}
