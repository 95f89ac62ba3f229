//! Exact generalized inverses of non-decreasing piecewise-affine functions,
//! the measures they induce, and unimodality tests.

pub mod error;
pub mod fixtures;
pub mod harness;
pub mod interval;
pub mod measure;
pub mod monotone;
pub mod number;
pub mod repr;
pub mod step;
pub mod unimodal;

pub use error::{Error, Result};
pub use interval::Interval;
pub use monotone::{Affine, Breakpoint, PiecewiseMonotone, Version};
pub use number::{format_rational, int, parse_rational, ratio, ExtendedReal, Rational};
