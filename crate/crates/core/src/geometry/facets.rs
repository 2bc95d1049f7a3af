use serde::Serialize;

use super::{DataSet, UnitDirection};
use crate::error::{Error, Result};
use crate::linalg::{self, Combinations};
use crate::scalar::Scalar;

/// A hull facet spanned by exactly `k` data points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Facet<S> {
    pub indices: Vec<usize>,
    /// Points toward the non-facet data.
    pub inward_normal: UnitDirection<S>,
    /// Common projection of the facet points onto `inward_normal`.
    pub support_value: S,
}

/// Unnormalized normal of the hyperplane through `points` (`k` points in `R^k`),
/// from the cofactors of the `(k-1) x k` difference matrix.
pub fn hyperplane_normal<S: Scalar>(points: &[&[S]]) -> Vec<S> {
    let k = points[0].len();
    let diffs: Vec<Vec<S>> = points[1..]
        .iter()
        .map(|p| linalg::sub(p, points[0]))
        .collect();
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<S>> = diffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let d = if minor.is_empty() {
                S::one()
            } else {
                linalg::det(minor)
            };
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// All `k`-subsets whose spanning hyperplane leaves every other point strictly
/// on one side. Exhaustive over `C(n, k)` subsets.
pub fn enumerate_facets<S: Scalar>(x: &DataSet<S>) -> Result<Vec<Facet<S>>> {
    let k = x.k();
    if x.n() <= k {
        return Err(Error::SampleSize { n: x.n(), k });
    }
    let tol = S::geometric_tolerance() * x.diameter();
    let mut facets = Vec::new();
    for subset in Combinations::new(x.n(), k) {
        let pts: Vec<&[S]> = subset.iter().map(|&i| x.point(i)).collect();
        let raw = hyperplane_normal(&pts);
        let u = match UnitDirection::normalize(raw) {
            Ok(u) => u,
            Err(_) => {
                return Err(Error::NotGeneralPosition { witness: subset });
            }
        };
        let support = linalg::dot(u.as_slice(), pts[0]);
        let mut above = 0usize;
        let mut below = 0usize;
        for i in 0..x.n() {
            if subset.contains(&i) {
                continue;
            }
            let d = linalg::dot(u.as_slice(), x.point(i)) - support;
            if d.abs() <= tol {
                let mut witness = subset.clone();
                witness.push(i);
                witness.sort_unstable();
                return Err(Error::NotGeneralPosition { witness });
            }
            if d > S::zero() {
                above += 1;
            } else {
                below += 1;
            }
        }
        if above > 0 && below > 0 {
            continue;
        }
        let (u, support) = if below > 0 {
            (u.negated(), -support)
        } else {
            (u, support)
        };
        facets.push(Facet {
            indices: subset,
            inward_normal: u,
            support_value: support,
        });
    }
    Ok(facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(p: &[&[f64]]) -> DataSet<f64> {
        DataSet::new(p.iter().map(|q| q.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triangle_has_three_edges() {
        let f = enumerate_facets(&ds(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]])).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn square_diagonals_are_not_facets() {
        let f = enumerate_facets(&ds(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]))
            .unwrap();
        let idx: Vec<_> = f.iter().map(|f| f.indices.clone()).collect();
        assert_eq!(idx, vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn simplex_in_three_dimensions() {
        let f = enumerate_facets(&ds(&[
            &[0.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.0, 0.0, 1.0],
        ]))
        .unwrap();
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn inward_normal_points_at_data() {
        let x = ds(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 4.0], &[1.0, 1.0]]);
        for f in enumerate_facets(&x).unwrap() {
            for i in 0..x.n() {
                let d = linalg::dot(f.inward_normal.as_slice(), x.point(i)) - f.support_value;
                if f.indices.contains(&i) {
                    assert!(d.abs() < 1e-12);
                } else {
                    assert!(d > 0.0);
                }
            }
        }
    }

    #[test]
    fn collinear_extra_point_is_an_error() {
        let x = ds(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(
            enumerate_facets(&x),
            Err(Error::NotGeneralPosition { .. })
        ));
    }

    #[test]
    fn one_dimensional_facets_are_extremes() {
        let x = DataSet::from_values(&[3.0, -1.0, 2.0]).unwrap();
        let f = enumerate_facets(&x).unwrap();
        let idx: Vec<_> = f.iter().map(|f| f.indices[0]).collect();
        assert_eq!(idx, vec![0, 1]);
    }
}
