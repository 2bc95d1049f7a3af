use serde::Serialize;

use crate::estimators::EstimateSet;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContaminationFamily {
    /// `S ∪ A ∪ g_gamma(B)`: the sheared points of `B` replace `B`.
    ShearB,
    /// `S ∪ g_-gamma(A) ∪ B`: the counter-sheared points of `A` replace `A`.
    ShearA,
    /// A tight cluster far out along a fixed direction.
    TranslationCluster,
}

/// One contaminated data set and the estimator's response to it.
#[derive(Clone, Debug, Serialize)]
pub struct AttackRecord<S> {
    pub family: ContaminationFamily,
    /// Position of the requested value in the trace's grid.
    pub grid_index: usize,
    /// Grid value actually used (after any general-position nudge).
    pub parameter: S,
    /// Exactly `m` original indices; an index may be "replaced" by itself.
    pub replaced: Vec<usize>,
    pub replacements: Vec<Vec<S>>,
    pub estimate: EstimateSet<S>,
    /// Estimate-set distance (sup over member pairs) to `T(X)`.
    pub distance: S,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness<S> {
    pub family: ContaminationFamily,
    pub parameter: S,
    pub distance: S,
}

#[derive(Clone, Debug, Serialize)]
pub struct Nudge<S> {
    pub requested: S,
    pub used: S,
}

/// Geometry of a shear attack: the facet, the fixed subset and the partition.
#[derive(Clone, Debug, Serialize)]
pub struct ShearSetup<S> {
    pub facet: Vec<usize>,
    pub fixed: Vec<usize>,
    pub moved_a: Vec<usize>,
    pub moved_b: Vec<usize>,
    pub normal: Vec<S>,
    pub shear_axis: Vec<S>,
    pub origin: Vec<S>,
    /// `e_1`-coordinate of the canonical estimate.
    pub estimate_offset: S,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttackTrace<S> {
    /// `"shear"` or `"translation"`.
    pub family: &'static str,
    pub estimator: String,
    pub n: usize,
    pub k: usize,
    pub h: Option<usize>,
    pub m: usize,
    pub grid: Vec<S>,
    pub records: Vec<AttackRecord<S>>,
    /// Per grid value, the largest distance over the records at that value.
    pub distances: Vec<S>,
    pub max_distance: S,
    pub divergence_threshold: S,
    pub diverged: bool,
    pub witness: Option<Witness<S>>,
    pub setup: Option<ShearSetup<S>>,
    pub nudges: Vec<Nudge<S>>,
    /// Grid values dropped because general position could not be restored.
    pub skipped: Vec<S>,
    /// Largest relative residual of `X'_gamma = g_gamma(S ∪ A_-gamma ∪ B)`.
    pub max_identity_residual: S,
    /// Largest relative residual of `g_gamma ∘ g_1 = g_(gamma + 1)`.
    pub max_group_residual: S,
}

impl<S: Scalar> AttackTrace<S> {
    /// Fills the per-grid distances, the verdict and the witness from the records.
    pub(crate) fn finish(&mut self) {
        self.distances = self
            .grid
            .iter()
            .enumerate()
            .map(|(gi, _)| {
                self.records
                    .iter()
                    .filter(|r| r.grid_index == gi)
                    .map(|r| r.distance)
                    .fold(S::zero(), S::max)
            })
            .collect();
        self.max_distance = self
            .records
            .iter()
            .map(|r| r.distance)
            .fold(S::zero(), S::max);
        self.diverged = self.max_distance > self.divergence_threshold;
        self.witness = self
            .records
            .iter()
            .find(|r| r.distance > self.divergence_threshold)
            .map(|r| Witness {
                family: r.family,
                parameter: r.parameter,
                distance: r.distance,
            });
    }
}
