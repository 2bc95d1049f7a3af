use super::{EquivarianceClass, EstimateSet, LocationEstimator};
use crate::depth::{DirectionBudget, ProjectionProfile};
use crate::error::{Error, Result};
use crate::estimators::weighted_mean;
use crate::geometry::DataSet;
use crate::scalar::Scalar;

/// Mean of the `n - t` points of smallest outlyingness (ties by index).
pub fn trimmed_mean<S: Scalar>(
    x: &DataSet<S>,
    trim_count: usize,
    budget: &DirectionBudget,
) -> Result<Vec<S>> {
    if trim_count > x.n() || x.n() - trim_count < x.k() + 1 {
        return Err(Error::InvalidParameter(format!(
            "trimming {trim_count} of {} points leaves fewer than k + 1 = {}",
            x.n(),
            x.k() + 1
        )));
    }
    let profile = ProjectionProfile::from_budget(x, 0, budget)?;
    let outs = x
        .points()
        .iter()
        .map(|p| profile.evaluate(p))
        .collect::<Result<Vec<S>>>()?;
    let mut order: Vec<usize> = (0..x.n()).collect();
    order.sort_by(|&a, &b| outs[a].partial_cmp(&outs[b]).unwrap().then(a.cmp(&b)));
    let mut weights = vec![S::zero(); x.n()];
    for &i in &order[..x.n() - trim_count] {
        weights[i] = S::one();
    }
    weighted_mean(x, &weights)
}

#[derive(Clone, Debug)]
pub struct TrimmedMean {
    pub trim_count: usize,
    pub budget: DirectionBudget,
}

impl<S: Scalar> LocationEstimator<S> for TrimmedMean {
    fn name(&self) -> &str {
        "tmean"
    }

    /// Outlyingness is estimated over sampled directions, which commute with
    /// translations but not with general linear maps.
    fn equivariance_class(&self) -> EquivarianceClass {
        EquivarianceClass::Translation
    }

    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>> {
        Ok(EstimateSet::single(trimmed_mean(
            x,
            self.trim_count,
            &self.budget,
        )?))
    }
}
