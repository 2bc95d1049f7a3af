use super::{EquivarianceClass, EstimateSet, LocationEstimator};
use crate::error::{Error, Result};
use crate::geometry::DataSet;
use crate::scalar::Scalar;

/// `sum_i w_i x_i / sum_i w_i` with `0 <= w_i <= 1`.
pub fn weighted_mean<S: Scalar>(x: &DataSet<S>, weights: &[S]) -> Result<Vec<S>> {
    if weights.len() != x.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} weights, got {}",
            x.n(),
            weights.len()
        )));
    }
    if weights
        .iter()
        .any(|&w| !(w >= S::zero() && w <= S::one()))
    {
        return Err(Error::InvalidParameter("weights must lie in [0, 1]".into()));
    }
    let total: S = weights.iter().copied().sum();
    if !(total > S::zero()) {
        return Err(Error::InvalidParameter("weights sum to zero".into()));
    }
    Ok((0..x.k())
        .map(|j| {
            x.points()
                .iter()
                .zip(weights)
                .map(|(p, &w)| w * p[j])
                .sum::<S>()
                / total
        })
        .collect())
}

/// Weighted mean with index-aligned weights; `None` means all ones.
#[derive(Clone, Debug, Default)]
pub struct WeightedMean<S> {
    pub weights: Option<Vec<S>>,
}

impl<S: Scalar> WeightedMean<S> {
    pub fn centroid() -> Self {
        Self { weights: None }
    }

    pub fn with_weights(weights: Vec<S>) -> Self {
        Self {
            weights: Some(weights),
        }
    }
}

impl<S: Scalar> LocationEstimator<S> for WeightedMean<S> {
    fn name(&self) -> &str {
        "wmean"
    }

    fn equivariance_class(&self) -> EquivarianceClass {
        EquivarianceClass::Affine
    }

    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>> {
        let p = match &self.weights {
            Some(w) => weighted_mean(x, w)?,
            None => x.centroid(),
        };
        Ok(EstimateSet::single(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> DataSet<f64> {
        DataSet::new(vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 3.0]]).unwrap()
    }

    #[test]
    fn unit_weights_give_centroid() {
        assert_eq!(weighted_mean(&tri(), &[1.0, 1.0, 1.0]).unwrap(), vec![1.0, 1.0]);
    }

    #[test]
    fn single_weight_selects_point() {
        assert_eq!(weighted_mean(&tri(), &[0.0, 1.0, 0.0]).unwrap(), vec![3.0, 0.0]);
    }

    #[test]
    fn invalid_weights() {
        assert!(weighted_mean(&tri(), &[0.0, 0.0, 0.0]).is_err());
        assert!(weighted_mean(&tri(), &[1.5, 0.0, 0.0]).is_err());
        assert!(weighted_mean(&tri(), &[1.0, 1.0]).is_err());
    }
}
