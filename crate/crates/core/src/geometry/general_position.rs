use serde::Serialize;

use super::DataSet;
use crate::linalg::{self, Combinations};
use crate::scalar::Scalar;

/// Threshold used to decide whether `k + 1` points are affinely dependent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GpTolerance<S> {
    /// `|det| <= eps * diam^k`, with `diam` the diameter of the subset.
    Relative(S),
    /// `|det|` within a floating-point error bound of zero. Accepts thin but
    /// numerically resolved configurations such as large shears.
    RoundOff,
}

impl<S: Scalar> Default for GpTolerance<S> {
    fn default() -> Self {
        GpTolerance::Relative(S::geometric_tolerance())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneralPosition {
    pub holds: bool,
    /// A `k + 1` index subset lying on a common hyperplane, when `holds` is false.
    pub witness: Option<Vec<usize>>,
}

pub fn check_general_position<S: Scalar>(x: &DataSet<S>) -> GeneralPosition {
    check_general_position_with(x, GpTolerance::default())
}

pub fn check_general_position_with<S: Scalar>(
    x: &DataSet<S>,
    tol: GpTolerance<S>,
) -> GeneralPosition {
    let k = x.k();
    for subset in Combinations::new(x.n(), k + 1) {
        if is_degenerate(x, &subset, tol) {
            return GeneralPosition {
                holds: false,
                witness: Some(subset),
            };
        }
    }
    GeneralPosition {
        holds: true,
        witness: None,
    }
}

pub(crate) fn is_degenerate<S: Scalar>(
    x: &DataSet<S>,
    subset: &[usize],
    tol: GpTolerance<S>,
) -> bool {
    let base = x.point(subset[0]);
    let diffs: Vec<Vec<S>> = subset[1..]
        .iter()
        .map(|&i| linalg::sub(x.point(i), base))
        .collect();
    match tol {
        GpTolerance::Relative(eps) => {
            let mut diam = S::zero();
            for (a, &i) in subset.iter().enumerate() {
                for &j in &subset[a + 1..] {
                    diam = diam.max(linalg::distance(x.point(i), x.point(j)));
                }
            }
            if diam == S::zero() {
                return true;
            }
            let k = x.k() as i32;
            linalg::det(diffs).abs() <= eps * diam.powi(k)
        }
        GpTolerance::RoundOff => {
            let bound = linalg::abs_row_product(&diffs);
            let d = linalg::det(diffs).abs();
            d <= S::lit(1e3) * S::epsilon() * bound
        }
    }
}
