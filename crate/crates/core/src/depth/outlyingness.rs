use rayon::prelude::*;

use super::directions::DirectionBudget;
use super::univariate::{mad_index_value, median_of_sorted, sorted};
use crate::error::{Error, Result};
use crate::geometry::{DataSet, UnitDirection};
use crate::linalg;
use crate::scalar::Scalar;

/// Per-direction median and scale of the projected data.
///
/// Both are independent of the query point, so evaluating the outlyingness
/// of many candidates costs one inner product per direction each.
#[derive(Clone, Debug)]
pub struct ProjectionProfile<S> {
    directions: Vec<Vec<S>>,
    centers: Vec<S>,
    scales: Vec<S>,
}

impl<S: Scalar> ProjectionProfile<S> {
    pub fn new(
        x: &DataSet<S>,
        scale_shift: usize,
        directions: Vec<UnitDirection<S>>,
    ) -> Result<Self> {
        if scale_shift > x.n() - 1 {
            return Err(Error::InvalidParameter(format!(
                "scale shift {scale_shift} exceeds n - 1 = {}",
                x.n() - 1
            )));
        }
        if directions.is_empty() {
            return Err(Error::InvalidParameter("empty direction set".into()));
        }
        if directions.iter().any(|u| u.dim() != x.k()) {
            return Err(Error::DimensionMismatch {
                expected: x.k(),
                found: directions[0].dim(),
                index: 0,
            });
        }
        let stats: Vec<(Vec<S>, S, S)> = directions
            .into_par_iter()
            .map(|u| {
                let proj = sorted(&x.project(u.as_slice()));
                let center = median_of_sorted(&proj).midpoint();
                let dev = sorted(&proj.iter().map(|&p| (p - center).abs()).collect::<Vec<_>>());
                let scale = mad_index_value(&dev, scale_shift);
                (u.into_inner(), center, scale)
            })
            .collect();
        let mut directions = Vec::with_capacity(stats.len());
        let mut centers = Vec::with_capacity(stats.len());
        let mut scales = Vec::with_capacity(stats.len());
        for (u, c, s) in stats {
            directions.push(u);
            centers.push(c);
            scales.push(s);
        }
        Ok(Self {
            directions,
            centers,
            scales,
        })
    }

    pub fn from_budget(x: &DataSet<S>, scale_shift: usize, budget: &DirectionBudget) -> Result<Self> {
        Self::new(x, scale_shift, budget.directions(x))
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// `max_u |u'x - med(u'X)| / MAD(u'X)` over the probed directions.
    ///
    /// A direction with zero scale and nonzero deviation yields `+inf`;
    /// zero over zero is skipped. Errors when every direction is skipped.
    pub fn evaluate(&self, x: &[S]) -> Result<S> {
        let mut best: Option<S> = None;
        for ((u, &c), &s) in self.directions.iter().zip(&self.centers).zip(&self.scales) {
            let num = (linalg::dot(u, x) - c).abs();
            let r = if s > S::zero() {
                num / s
            } else if num > S::zero() {
                S::infinity()
            } else {
                continue;
            };
            best = Some(best.map_or(r, |b: S| b.max(r)));
        }
        best.ok_or(Error::DegenerateScale)
    }
}

/// Stahel-Donoho outlyingness of `x` with respect to `data`.
pub fn outlyingness<S: Scalar>(
    x: &[S],
    data: &DataSet<S>,
    scale_shift: usize,
    budget: &DirectionBudget,
) -> Result<S> {
    if x.len() != data.k() {
        return Err(Error::DimensionMismatch {
            expected: data.k(),
            found: x.len(),
            index: 0,
        });
    }
    ProjectionProfile::from_budget(data, scale_shift, budget)?.evaluate(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget(seed: u64) -> DirectionBudget {
        DirectionBudget {
            random_count: 200,
            include_data_directions: true,
            seed,
        }
    }

    #[test]
    fn one_dimensional_formula() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(outlyingness(&[10.0], &x, 0, &budget(1)).unwrap(), 8.0);
        assert_eq!(outlyingness(&[2.0], &x, 0, &budget(1)).unwrap(), 0.0);
    }

    #[test]
    fn symmetric_center_has_zero_outlyingness() {
        let x = DataSet::new(vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 2.0],
            vec![0.0, -2.0],
            vec![0.5, 0.7],
            vec![-0.5, -0.7],
        ])
        .unwrap();
        assert!(outlyingness(&[0.0, 0.0], &x, 0, &budget(3)).unwrap() < 1e-12);
    }

    #[test]
    fn zero_scale_gives_infinity_or_error() {
        let x = DataSet::from_values(&[1.0, 1.0, 1.0, 5.0]).unwrap();
        assert_eq!(outlyingness(&[2.0], &x, 0, &budget(1)).unwrap(), f64::INFINITY);
        assert!(matches!(
            outlyingness(&[1.0], &x, 0, &budget(1)),
            Err(Error::DegenerateScale)
        ));
    }

    #[test]
    fn shift_out_of_range() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.0]).unwrap();
        assert!(outlyingness(&[0.0], &x, 3, &budget(1)).is_err());
    }
}
