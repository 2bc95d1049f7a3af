use std::cmp::Ordering;

use super::directions::DirectionBudget;
use crate::error::{Error, Result};
use crate::geometry::DataSet;
use crate::linalg;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthMode {
    /// Exact bivariate depth by an angular sweep.
    Exact2d,
    /// Minimum over the budget's directions; an upper bound on the true depth.
    Sampled(DirectionBudget),
}

/// Tukey halfspace depth: the minimum number of data points in a closed
/// halfspace whose boundary passes through `x`.
pub fn tukey_depth<S: Scalar>(x: &[S], data: &DataSet<S>, mode: &DepthMode) -> Result<usize> {
    if x.len() != data.k() {
        return Err(Error::DimensionMismatch {
            expected: data.k(),
            found: x.len(),
            index: 0,
        });
    }
    match mode {
        DepthMode::Exact2d => {
            if data.k() != 2 {
                return Err(Error::InvalidParameter(format!(
                    "exact depth needs k = 2, got k = {}",
                    data.k()
                )));
            }
            Ok(exact_depth_2d(x, data))
        }
        DepthMode::Sampled(budget) => {
            let t = |u: &[S]| linalg::dot(u, x);
            Ok(budget
                .directions(data)
                .iter()
                .flat_map(|u| [u.clone(), u.negated()])
                .map(|u| {
                    let c = t(u.as_slice());
                    data.points()
                        .iter()
                        .filter(|p| linalg::dot(u.as_slice(), p) >= c)
                        .count()
                })
                .min()
                .unwrap_or(data.n()))
        }
    }
}

/// Depth = (#points at x) + (#others) - (max #others inside an open half-plane
/// through x). The maximum is found by sweeping the angularly sorted offsets
/// with two pointers.
fn exact_depth_2d<S: Scalar>(x: &[S], data: &DataSet<S>) -> usize {
    let tol = S::geometric_tolerance() * data.diameter();
    let mut coincident = 0usize;
    let mut offsets: Vec<(S, [S; 2])> = Vec::with_capacity(data.n());
    for p in data.points() {
        let d = [p[0] - x[0], p[1] - x[1]];
        if (d[0] * d[0] + d[1] * d[1]).sqrt() <= tol {
            coincident += 1;
        } else {
            offsets.push((d[1].atan2(d[0]), d));
        }
    }
    let m = offsets.len();
    if m == 0 {
        return coincident;
    }
    offsets.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    let vecs: Vec<[S; 2]> = offsets.into_iter().map(|(_, d)| d).collect();
    // b lies less than a half-turn counter-clockwise from a
    let within = |a: &[S; 2], b: &[S; 2]| {
        let cross = a[0] * b[1] - a[1] * b[0];
        let dot = a[0] * b[0] + a[1] * b[1];
        let scale = (a[0] * a[0] + a[1] * a[1]).sqrt() * (b[0] * b[0] + b[1] * b[1]).sqrt();
        let eps = S::lit(1e-12) * scale;
        cross > eps || (cross.abs() <= eps && dot > S::zero())
    };
    let mut best = 0usize;
    let mut j = 0usize;
    for i in 0..m {
        if j < i + 1 {
            j = i + 1;
        }
        while j < i + m && within(&vecs[i], &vecs[j % m]) {
            j += 1;
        }
        best = best.max(j - i);
    }
    coincident + m - best
}
