use rayon::prelude::*;
use serde::Serialize;

use super::{EquivarianceClass, EstimateSet, LocationEstimator};
use crate::error::{Error, Result};
use crate::geometry::DataSet;
use crate::linalg::{self, binomial, Combinations};
use crate::scalar::Scalar;

/// Largest number of subsets the exhaustive search will visit.
pub const MCD_SUBSET_LIMIT: u128 = 10_000_000;

/// `floor((n + k + 1) / 2)`, the coverage with the highest breakdown value.
pub fn default_coverage(n: usize, k: usize) -> usize {
    (n + k + 1) / 2
}

#[derive(Clone, Debug, Serialize)]
pub struct McdFit<S> {
    pub estimate: EstimateSet<S>,
    /// Minimal covariance determinant.
    pub objective: S,
    /// Every subset attaining the minimum, in lexicographic order.
    pub subsets: Vec<Vec<usize>>,
}

/// Covariance determinant of the rows `idx`, from a QR factorization of the
/// centered data. `None` when the subset is numerically singular.
pub(crate) fn subset_objective<S: Scalar>(x: &DataSet<S>, idx: &[usize]) -> Option<S> {
    let k = x.k();
    let h = S::from_count(idx.len());
    let mean: Vec<S> = (0..k)
        .map(|j| idx.iter().map(|&i| x.point(i)[j]).sum::<S>() / h)
        .collect();
    let centered: Vec<Vec<S>> = idx
        .iter()
        .map(|&i| linalg::sub(x.point(i), &mean))
        .collect();
    let frob = centered
        .iter()
        .flat_map(|r| r.iter())
        .map(|&v| v * v)
        .sum::<S>()
        .sqrt();
    let diag = linalg::householder_r_diagonal(centered);
    // usual numerical-rank cutoff for a QR factorization
    let floor = h * S::epsilon() * frob;
    if diag.iter().any(|d| d.abs() <= floor) {
        return None;
    }
    let dof = (h - S::one()).powi(k as i32);
    Some(diag.iter().fold(S::one(), |acc, &d| acc * d * d) / dof)
}

fn subset_mean<S: Scalar>(x: &DataSet<S>, idx: &[usize]) -> Vec<S> {
    let h = S::from_count(idx.len());
    (0..x.k())
        .map(|j| idx.iter().map(|&i| x.point(i)[j]).sum::<S>() / h)
        .collect()
}

struct Partial<S> {
    best: Option<S>,
    within: Vec<(S, Vec<usize>)>,
}

fn within_tie<S: Scalar>(obj: S, best: S) -> bool {
    obj <= best * (S::one() + S::tie_tolerance())
}

/// Minimum covariance determinant by exhaustive enumeration of all
/// `coverage`-subsets. Returns the means of every optimal subset.
pub fn mcd_exhaustive<S: Scalar>(x: &DataSet<S>, coverage: usize) -> Result<McdFit<S>> {
    let (n, k) = (x.n(), x.k());
    if coverage < k + 1 || coverage > n {
        return Err(Error::InvalidParameter(format!(
            "coverage {coverage} outside [{}, {n}]",
            k + 1
        )));
    }
    let count = binomial(n, coverage);
    if count > MCD_SUBSET_LIMIT {
        return Err(Error::CombinatorialBudget {
            count,
            limit: MCD_SUBSET_LIMIT,
        });
    }
    // split by smallest index so partitions can run independently
    let partials: Vec<Partial<S>> = (0..=n - coverage)
        .into_par_iter()
        .map(|first| {
            let mut p = Partial {
                best: None,
                within: Vec::new(),
            };
            for rest in Combinations::new(n - first - 1, coverage - 1) {
                let mut idx = Vec::with_capacity(coverage);
                idx.push(first);
                idx.extend(rest.into_iter().map(|r| r + first + 1));
                let Some(obj) = subset_objective(x, &idx) else {
                    continue;
                };
                match p.best {
                    Some(b) if within_tie(obj, b) => {
                        if obj < b {
                            p.best = Some(obj);
                            p.within.retain(|(o, _)| within_tie(*o, obj));
                        }
                        p.within.push((obj, idx));
                    }
                    Some(b) if obj > b => {}
                    _ => {
                        p.best = Some(obj);
                        p.within.clear();
                        p.within.push((obj, idx));
                    }
                }
            }
            p
        })
        .collect();
    let best = partials
        .iter()
        .filter_map(|p| p.best)
        .fold(None, |acc: Option<S>, b| Some(acc.map_or(b, |a| a.min(b))))
        .ok_or(Error::SingularCovariance)?;
    let mut subsets: Vec<Vec<usize>> = partials
        .into_iter()
        .flat_map(|p| p.within)
        .filter(|(o, _)| within_tie(*o, best))
        .map(|(_, idx)| idx)
        .collect();
    subsets.sort();
    let means = subsets.iter().map(|s| subset_mean(x, s)).collect();
    Ok(McdFit {
        estimate: EstimateSet::from_members(means)?,
        objective: best,
        subsets,
    })
}

/// Location output of the exhaustive MCD.
#[derive(Clone, Debug, Default)]
pub struct Mcd {
    /// Defaults to `floor((n + k + 1) / 2)`.
    pub coverage: Option<usize>,
}

impl<S: Scalar> LocationEstimator<S> for Mcd {
    fn name(&self) -> &str {
        "mcd"
    }

    fn equivariance_class(&self) -> EquivarianceClass {
        EquivarianceClass::Affine
    }

    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>> {
        let h = self
            .coverage
            .unwrap_or_else(|| default_coverage(x.n(), x.k()));
        Ok(mcd_exhaustive(x, h)?.estimate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_coverage_is_centroid() {
        let x = DataSet::new(vec![
            vec![0.0, 0.0],
            vec![4.0, 1.0],
            vec![1.0, 3.0],
            vec![2.0, -1.0],
        ])
        .unwrap();
        let fit = mcd_exhaustive(&x, 4).unwrap();
        assert_eq!(fit.estimate.members(), &[x.centroid()]);
    }

    #[test]
    fn one_dimensional_variance_minimizer() {
        // all ten triples enumerated by hand: {0, 0.1, 0.2} and {0.1, 0.2, 0.3}
        // both have variance 0.01, so both are optimal
        let x: DataSet<f64> = DataSet::from_values(&[0.0, 0.1, 0.2, 0.3, 100.0]).unwrap();
        let fit = mcd_exhaustive(&x, 3).unwrap();
        assert_eq!(fit.subsets.len(), 2);
        assert!((fit.estimate.canonical()[0] - 0.1).abs() < 1e-12);
        assert!((fit.objective - 0.01).abs() < 1e-12);
    }

    #[test]
    fn mirror_symmetric_ties() {
        let x = DataSet::from_values(&[-10.0, -1.0, 0.0, 1.0, 10.0]).unwrap();
        let fit = mcd_exhaustive(&x, 2).unwrap();
        assert_eq!(fit.subsets, vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(fit.estimate.len(), 2);
    }

    #[test]
    fn coverage_and_budget_errors() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.0]).unwrap();
        assert!(mcd_exhaustive(&x, 1).is_err());
        assert!(mcd_exhaustive(&x, 4).is_err());
        let big = DataSet::from_values(&(0..60).map(f64::from).collect::<Vec<_>>()).unwrap();
        assert!(matches!(
            mcd_exhaustive(&big, 30),
            Err(Error::CombinatorialBudget { .. })
        ));
    }

    #[test]
    fn all_singular_is_an_error() {
        let x = DataSet::from_values(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            mcd_exhaustive(&x, 2),
            Err(Error::SingularCovariance)
        ));
    }

    #[test]
    fn default_coverage_values() {
        assert_eq!(default_coverage(10, 2), 6);
        assert_eq!(default_coverage(5, 1), 3);
    }
}
