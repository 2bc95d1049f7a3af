use rayon::prelude::*;

use super::{coordinatewise_median, EquivarianceClass, EstimateSet, LocationEstimator};
use crate::depth::{DirectionBudget, ProjectionProfile};
use crate::error::{Error, Result};
use crate::geometry::DataSet;
use crate::scalar::Scalar;

/// Which MAD order statistic standardizes the projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleShift {
    /// Ordinary MAD (`j = 0`).
    Ordinary,
    /// Dimension-adjusted MAD (`j = k - 1`).
    DimensionAdjusted,
    Fixed(usize),
}

impl ScaleShift {
    pub fn resolve(self, k: usize) -> usize {
        match self {
            ScaleShift::Ordinary => 0,
            ScaleShift::DimensionAdjusted => k - 1,
            ScaleShift::Fixed(j) => j,
        }
    }
}

fn grid_points_per_axis(k: usize) -> usize {
    match k {
        1 | 2 => 9,
        3 => 5,
        _ => 3,
    }
}

/// Projection-depth maximizer over a refining candidate grid.
///
/// Candidates are the data points, the coordinatewise median and, for each of
/// `grid_refinements + 1` rounds, a regular grid centered at the incumbent
/// whose box starts at the data diameter and halves every round. Returns all
/// candidates whose depth `1 / (1 + Out)` is within `1e-9` of the best.
pub fn projection_median<S: Scalar>(
    x: &DataSet<S>,
    scale_shift: usize,
    budget: &DirectionBudget,
    grid_refinements: usize,
) -> Result<EstimateSet<S>> {
    let profile = ProjectionProfile::from_budget(x, scale_shift, budget)?;
    let depth = |o: S| S::one() / (S::one() + o);

    let mut candidates: Vec<Vec<S>> = x.points().to_vec();
    candidates.push(coordinatewise_median(x)?.canonical().to_vec());
    let mut scored = score(&profile, candidates)?;
    if scored.is_empty() {
        return Err(Error::DegenerateScale);
    }

    let k = x.k();
    let g = grid_points_per_axis(k);
    let mut half_width = x.diameter() / S::lit(2.0);
    for _ in 0..=grid_refinements {
        let incumbent = best_index(&scored);
        let center = scored[incumbent].0.clone();
        let step = S::lit(2.0) * half_width / S::from_count(g - 1);
        let grid = grid_around(&center, half_width, step, g);
        scored.extend(score(&profile, grid)?);
        half_width /= S::lit(2.0);
    }

    let best = depth(scored[best_index(&scored)].1);
    let tol = S::tie_tolerance();
    let members: Vec<Vec<S>> = scored
        .into_iter()
        .filter(|(_, o)| depth(*o) >= best - tol)
        .map(|(p, _)| p)
        .collect();
    EstimateSet::from_members(members)
}

/// `(candidate, outlyingness)`; candidates with undefined outlyingness are dropped.
fn score<S: Scalar>(profile: &ProjectionProfile<S>, candidates: Vec<Vec<S>>) -> Result<Vec<(Vec<S>, S)>> {
    let scored: Vec<(Vec<S>, Result<S>)> = candidates
        .into_par_iter()
        .map(|c| {
            let o = profile.evaluate(&c);
            (c, o)
        })
        .collect();
    let mut out = Vec::with_capacity(scored.len());
    for (c, o) in scored {
        match o {
            Ok(o) => out.push((c, o)),
            Err(Error::DegenerateScale) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// First candidate of minimal outlyingness.
fn best_index<S: Scalar>(scored: &[(Vec<S>, S)]) -> usize {
    let mut best = 0;
    for (i, (_, o)) in scored.iter().enumerate() {
        if *o < scored[best].1 {
            best = i;
        }
    }
    best
}

fn grid_around<S: Scalar>(center: &[S], half_width: S, step: S, g: usize) -> Vec<Vec<S>> {
    let k = center.len();
    let total = g.pow(k as u32);
    (0..total)
        .map(|mut code| {
            (0..k)
                .map(|j| {
                    let t = code % g;
                    code /= g;
                    center[j] - half_width + step * S::from_count(t)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ProjectionMedian {
    pub scale_shift: ScaleShift,
    pub budget: DirectionBudget,
    pub grid_refinements: usize,
}

impl ProjectionMedian {
    pub const DEFAULT_GRID_REFINEMENTS: usize = 24;

    pub fn new(budget: DirectionBudget) -> Self {
        Self {
            scale_shift: ScaleShift::DimensionAdjusted,
            budget,
            grid_refinements: Self::DEFAULT_GRID_REFINEMENTS,
        }
    }
}

impl<S: Scalar> LocationEstimator<S> for ProjectionMedian {
    fn name(&self) -> &str {
        "pm"
    }

    /// The sampled direction set and the axis-aligned grid only commute with
    /// translations.
    fn equivariance_class(&self) -> EquivarianceClass {
        EquivarianceClass::Translation
    }

    fn evaluate(&self, x: &DataSet<S>) -> Result<EstimateSet<S>> {
        projection_median(
            x,
            self.scale_shift.resolve(x.k()),
            &self.budget,
            self.grid_refinements,
        )
    }
}
