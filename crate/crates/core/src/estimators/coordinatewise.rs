use super::{EquivarianceClass, EstimateSet, LocationEstimator};
use crate::depth::univariate_median;
use crate::error::Result;
use crate::geometry::DataSet;
use crate::scalar::Scalar;

/// Per-coordinate median. Members are the corners of the box spanned by the
/// per-coordinate median intervals; the canonical member is its center.
pub fn coordinatewise_median<S: Scalar>(x: &DataSet<S>) -> Result<EstimateSet<S>> {
    let intervals = (0..x.k())
        .map(|j| univariate_median(&x.coordinate(j)))
        .collect::<Result<Vec<_>>>()?;
    let mut corners: Vec<Vec<S>> = vec![Vec::with_capacity(x.k())];
    for iv in &intervals {
        let ends: &[S] = if iv.low == iv.high {
            &[iv.low]
        } else {
            &[iv.low, iv.high]
        };
        corners = corners
            .into_iter()
            .flat_map(|c| {
                ends.iter().map(move |&e| {
                    let mut c = c.clone();
                    c.push(e);
                    c
                })
            })
            .collect();
    }
    let canonical = intervals.iter().map(|iv| iv.midpoint()).collect();
    EstimateSet::new(corners, canonical)
}

#[derive(Clone, Debug, Default)]
pub struct CoordinatewiseMedian;

impl<S: Scalar> LocationEstimator<S> for CoordinatewiseMedian {
    fn name(&self) -> &str {
        "cmedian"
    }

    fn equivariance_class(&self) -> EquivarianceClass {
        EquivarianceClass::Translation
    }

    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>> {
        coordinatewise_median(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let x = DataSet::new(vec![vec![0.0, 0.0], vec![2.0, 2.0], vec![1.0, 5.0]]).unwrap();
        let m = coordinatewise_median(&x).unwrap();
        assert_eq!(m.members(), &[vec![1.0, 2.0]]);

        let single = DataSet::sample(vec![vec![4.0, -1.0]]).unwrap();
        assert_eq!(coordinatewise_median(&single).unwrap().members(), &[vec![4.0, -1.0]]);

        let even = DataSet::from_values(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let m = coordinatewise_median(&even).unwrap();
        assert_eq!(m.members(), &[vec![2.0], vec![3.0]]);
        assert_eq!(m.canonical(), &[2.5]);
    }

    #[test]
    fn even_sample_in_two_dimensions_has_four_corners() {
        let x = DataSet::new(vec![
            vec![0.0, 0.0],
            vec![1.0, 3.0],
            vec![2.0, 1.0],
            vec![3.0, 2.0],
        ])
        .unwrap();
        let m = coordinatewise_median(&x).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.canonical(), &[1.5, 1.5]);
    }
}
