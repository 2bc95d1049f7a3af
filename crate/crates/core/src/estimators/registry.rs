use super::{
    CoordinatewiseMedian, LocationEstimator, Mcd, ProjectionMedian, ScaleShift, TrimmedMean,
    WeightedMean,
};
use crate::depth::DirectionBudget;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const ESTIMATOR_NAMES: [&str; 5] = ["cmedian", "mcd", "tmean", "pm", "wmean"];

/// Knobs shared by the name-addressable estimators. Fields irrelevant to the
/// chosen estimator are ignored.
#[derive(Clone, Debug)]
pub struct EstimatorParams {
    pub seed: u64,
    pub random_directions: usize,
    pub coverage: Option<usize>,
    pub trim_count: usize,
    pub scale_shift: Option<usize>,
    pub grid_refinements: usize,
    pub weights: Option<Vec<f64>>,
}

impl Default for EstimatorParams {
    fn default() -> Self {
        Self {
            seed: 0,
            random_directions: DirectionBudget::DEFAULT_RANDOM_COUNT,
            coverage: None,
            trim_count: 1,
            scale_shift: None,
            grid_refinements: ProjectionMedian::DEFAULT_GRID_REFINEMENTS,
            weights: None,
        }
    }
}

impl EstimatorParams {
    pub fn budget(&self) -> DirectionBudget {
        DirectionBudget {
            random_count: self.random_directions,
            include_data_directions: true,
            seed: self.seed,
        }
    }
}

/// Looks up `"cmedian"`, `"mcd"`, `"tmean"`, `"pm"` or `"wmean"`.
pub fn estimator_by_name<S: Scalar>(
    name: &str,
    params: &EstimatorParams,
) -> Result<Box<dyn LocationEstimator<S>>> {
    Ok(match name {
        "cmedian" => Box::new(CoordinatewiseMedian),
        "mcd" => Box::new(Mcd {
            coverage: params.coverage,
        }),
        "tmean" => Box::new(TrimmedMean {
            trim_count: params.trim_count,
            budget: params.budget(),
        }),
        "pm" => Box::new(ProjectionMedian {
            scale_shift: params
                .scale_shift
                .map_or(ScaleShift::DimensionAdjusted, ScaleShift::Fixed),
            budget: params.budget(),
            grid_refinements: params.grid_refinements,
        }),
        "wmean" => Box::new(WeightedMean {
            weights: params
                .weights
                .as_ref()
                .map(|w| w.iter().map(|&v| S::lit(v)).collect()),
        }),
        other => return Err(Error::UnknownEstimator(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::EquivarianceClass;

    #[test]
    fn every_name_resolves() {
        for name in ESTIMATOR_NAMES {
            let e = estimator_by_name::<f64>(name, &EstimatorParams::default()).unwrap();
            assert_eq!(e.name(), name);
        }
        let mcd = estimator_by_name::<f64>("mcd", &EstimatorParams::default()).unwrap();
        assert_eq!(mcd.equivariance_class(), EquivarianceClass::Affine);
        assert!(matches!(
            estimator_by_name::<f64>("mve", &EstimatorParams::default()),
            Err(Error::UnknownEstimator(_))
        ));
    }
}
