//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use serde::Serialize;

/// Real scalar the estimators and geometry are generic over.
///
/// Tolerances are per-type because the thresholds that make sense for
/// `f64` (e.g. `1e-9` relative for general position) are below the
/// resolution of `f32`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + 'static
{
    /// Relative tolerance for general-position and facet strictness tests.
    fn geometric_tolerance() -> Self;

    /// Tolerance on `| ||u|| - 1 |` for unit directions.
    fn unit_tolerance() -> Self;

    /// Tolerance on the off-diagonal Gram entries of an orthonormal basis.
    fn orthogonality_tolerance() -> Self;

    /// Relative tolerance used when collecting tied optima.
    fn tie_tolerance() -> Self;

    /// Tolerance below which two estimate-set members are merged.
    fn dedup_tolerance() -> Self;

    /// Converts an `f64` literal. Never fails for finite inputs on `f32`/`f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable")
    }
}

impl Scalar for f64 {
    fn geometric_tolerance() -> Self {
        1e-9
    }
    fn unit_tolerance() -> Self {
        1e-12
    }
    fn orthogonality_tolerance() -> Self {
        1e-10
    }
    fn tie_tolerance() -> Self {
        1e-9
    }
    fn dedup_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn geometric_tolerance() -> Self {
        1e-4
    }
    fn unit_tolerance() -> Self {
        1e-5
    }
    fn orthogonality_tolerance() -> Self {
        1e-5
    }
    fn tie_tolerance() -> Self {
        1e-5
    }
    fn dedup_tolerance() -> Self {
        1e-6
    }
}
