//! Translation-cluster contamination: the `m` points farthest along a
//! direction are replaced by a small, non-degenerate cluster placed at
//! distance `R` from the estimate along that direction.

use super::trace::{AttackRecord, AttackTrace, ContaminationFamily, Nudge};
use crate::error::{Error, Result};
use crate::estimators::LocationEstimator;
use crate::geometry::{check_general_position, DataSet, UnitDirection};
use crate::linalg;
use crate::metric::estimate_set_distance;
use crate::scalar::Scalar;

/// Relative spread of the cluster around its center.
pub const CLUSTER_SPREAD: f64 = 1e-6;

pub fn default_radius_grid<S: Scalar>() -> Vec<S> {
    (1..=9).map(|e| S::lit(10f64.powi(e))).collect()
}

#[derive(Clone, Debug)]
pub struct TranslationAttackConfig<S> {
    pub direction: UnitDirection<S>,
    pub m: usize,
    pub radius_grid: Vec<S>,
    pub threshold_factor: S,
}

impl<S: Scalar> TranslationAttackConfig<S> {
    pub fn new(direction: UnitDirection<S>, m: usize) -> Self {
        Self {
            direction,
            m,
            radius_grid: default_radius_grid(),
            threshold_factor: S::lit(1e6),
        }
    }
}

/// The `m` indices with the largest projection on `u`, ties by index.
fn farthest_along<S: Scalar>(x: &DataSet<S>, u: &[S], m: usize) -> Vec<usize> {
    let proj = x.project(u);
    let mut idx: Vec<usize> = (0..x.n()).collect();
    idx.sort_by(|&a, &b| proj[b].partial_cmp(&proj[a]).unwrap().then(a.cmp(&b)));
    let mut out = idx[..m].to_vec();
    out.sort_unstable();
    out
}

/// Cluster point `r` of `m`: `center + spread * R * (t, t^2, ..., t^k)`
/// with `t = (r + 1) / m`. The moment curve keeps the cluster in general
/// position among itself.
fn cluster<S: Scalar>(center: &[S], radius: S, m: usize) -> Vec<Vec<S>> {
    (0..m)
        .map(|r| {
            let t = S::from_count(r + 1) / S::from_count(m);
            let mut pw = S::one();
            center
                .iter()
                .map(|&c| {
                    pw *= t;
                    c + S::lit(CLUSTER_SPREAD) * radius * pw
                })
                .collect()
        })
        .collect()
}

pub fn translation_attack<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    config: &TranslationAttackConfig<S>,
) -> Result<AttackTrace<S>> {
    let (n, k, m) = (x.n(), x.k(), config.m);
    if config.direction.dim() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: config.direction.dim(),
            index: 0,
        });
    }
    if m > n {
        return Err(Error::InvalidParameter(format!("m = {m} exceeds n = {n}")));
    }
    if config.radius_grid.is_empty() {
        return Err(Error::InvalidParameter("empty radius grid".into()));
    }
    let base = t.evaluate(x)?;
    let u = config.direction.as_slice();
    let replaced = farthest_along(x, u, m);
    let mut trace = AttackTrace {
        family: "translation",
        estimator: t.name().to_string(),
        n,
        k,
        h: None,
        m,
        grid: config.radius_grid.clone(),
        records: Vec::new(),
        distances: Vec::new(),
        max_distance: S::zero(),
        divergence_threshold: config.threshold_factor * x.diameter(),
        diverged: false,
        witness: None,
        setup: None,
        nudges: Vec::new(),
        skipped: Vec::new(),
        max_identity_residual: S::zero(),
        max_group_residual: S::zero(),
    };
    for (gi, &requested) in config.radius_grid.iter().enumerate() {
        let mut found = None;
        for step in 0..=10usize {
            let radius = requested * (S::one() + S::lit(1e-7) * S::from_count(step));
            let center = linalg::add(base.canonical(), &linalg::scale(u, radius));
            let repl = cluster(&center, radius, m);
            let xc = x.with_replaced(&replaced, &repl)?;
            if m == 0 || check_general_position(&xc).holds {
                found = Some((radius, repl, xc));
                break;
            }
        }
        let Some((radius, repl, xc)) = found else {
            trace.skipped.push(requested);
            continue;
        };
        if radius != requested {
            trace.nudges.push(Nudge {
                requested,
                used: radius,
            });
        }
        let est = t.evaluate(&xc)?;
        trace.records.push(AttackRecord {
            family: ContaminationFamily::TranslationCluster,
            grid_index: gi,
            parameter: radius,
            replaced: replaced.clone(),
            replacements: repl,
            distance: estimate_set_distance(&est, &base),
            estimate: est,
        });
    }
    if trace.records.is_empty() {
        return Err(Error::GeneralPositionUnrecoverable);
    }
    trace.finish();
    Ok(trace)
}
