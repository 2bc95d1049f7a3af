//! Location estimators behind a common interface.

mod coordinatewise;
mod mcd;
mod projection_median;
mod registry;
mod trimmed;
mod weighted;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{AffineMap, DataSet};
use crate::linalg;
use crate::scalar::Scalar;

pub use coordinatewise::{coordinatewise_median, CoordinatewiseMedian};
pub use mcd::{default_coverage, mcd_exhaustive, Mcd, McdFit, MCD_SUBSET_LIMIT};
pub use projection_median::{projection_median, ProjectionMedian, ScaleShift};
pub use registry::{estimator_by_name, EstimatorParams, ESTIMATOR_NAMES};
pub use trimmed::{trimmed_mean, TrimmedMean};
pub use weighted::{weighted_mean, WeightedMean};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivarianceClass {
    Translation,
    Affine,
}

/// A deterministic functional from data sets to estimate sets.
pub trait LocationEstimator<S: Scalar>: Send + Sync {
    fn name(&self) -> &str;
    fn equivariance_class(&self) -> EquivarianceClass;
    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>>;
}

/// Nonempty finite set of location estimates; set-valued when the estimator
/// has ties.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateSet<S> {
    members: Vec<Vec<S>>,
    canonical: Vec<S>,
}

impl<S: Scalar> EstimateSet<S> {
    /// Members closer than the dedup tolerance are merged (first one kept).
    pub fn new(members: Vec<Vec<S>>, canonical: Vec<S>) -> Result<Self> {
        let k = canonical.len();
        if members.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (i, m) in members.iter().enumerate() {
            if m.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: m.len(),
                    index: i,
                });
            }
            if m.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite(i));
            }
        }
        if canonical.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("non-finite canonical estimate".into()));
        }
        let mut kept: Vec<Vec<S>> = Vec::with_capacity(members.len());
        for m in members {
            let tol = S::dedup_tolerance() * S::one().max(linalg::norm(&m));
            if !kept.iter().any(|q| linalg::distance(q, &m) <= tol) {
                kept.push(m);
            }
        }
        Ok(Self {
            members: kept,
            canonical,
        })
    }

    pub fn single(p: Vec<S>) -> Self {
        Self {
            members: vec![p.clone()],
            canonical: p,
        }
    }

    /// Canonical member is the first one.
    pub fn from_members(members: Vec<Vec<S>>) -> Result<Self> {
        let canonical = members.first().ok_or(Error::EmptyInput)?.clone();
        Self::new(members, canonical)
    }

    pub fn members(&self) -> &[Vec<S>] {
        &self.members
    }

    /// Point representative used where a single value is needed.
    pub fn canonical(&self) -> &[S] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.canonical.len()
    }

    pub fn map(&self, g: &AffineMap<S>) -> Self {
        Self {
            members: self.members.iter().map(|m| g.apply(m)).collect(),
            canonical: g.apply(&self.canonical),
        }
    }

    /// Hausdorff distance between member sets, also covering the canonical
    /// representatives.
    pub fn discrepancy(&self, other: &Self) -> S {
        let directed = |a: &[Vec<S>], b: &[Vec<S>]| {
            a.iter()
                .map(|p| {
                    b.iter()
                        .map(|q| linalg::distance(p, q))
                        .fold(S::infinity(), S::min)
                })
                .fold(S::zero(), S::max)
        };
        directed(&self.members, &other.members)
            .max(directed(&other.members, &self.members))
            .max(linalg::distance(&self.canonical, &other.canonical))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_validation() {
        let s = EstimateSet::new(
            vec![vec![1.0, 2.0], vec![1.0, 2.0 + 1e-14], vec![3.0, 0.0]],
            vec![2.0, 1.0],
        )
        .unwrap();
        assert_eq!(s.len(), 2);
        assert!(EstimateSet::<f64>::new(vec![], vec![0.0]).is_err());
        assert!(EstimateSet::new(vec![vec![f64::NAN]], vec![0.0]).is_err());
        assert!(EstimateSet::new(vec![vec![1.0, 2.0]], vec![0.0]).is_err());
    }

    #[test]
    fn discrepancy_is_symmetric_hausdorff() {
        let a = EstimateSet::from_members(vec![vec![0.0], vec![1.0]]).unwrap();
        let b = EstimateSet::from_members(vec![vec![0.0], vec![3.0]]).unwrap();
        assert_eq!(a.discrepancy(&b), 2.0);
        assert_eq!(b.discrepancy(&a), 2.0);
        assert_eq!(a.discrepancy(&a), 0.0);
    }
}
