//! Executable checks of the boundary condition `(C_h)`, the depth condition
//! `depth(T, X) >= k + 1`, and equivariance.
//!
//! Every verdict here is empirical: directions are enumerated (facets) or
//! sampled (lower-dimensional faces), so a passing report means "no violation
//! found", never a proof.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::depth::{tukey_depth, DepthMode, DirectionBudget};
use crate::error::{Error, Result};
use crate::estimators::{EquivarianceClass, EstimateSet, LocationEstimator};
use crate::geometry::{
    check_general_position, enumerate_facets, AffineMap, DataSet, Facet, UnitDirection,
};
use crate::linalg;
use crate::scalar::Scalar;

/// Directions sampled from the normal cone of each lower-dimensional face.
pub const CONE_SAMPLES_PER_FACE: usize = 32;

pub const EMPIRICAL_NOTE: &str = "empirical check over enumerated/sampled directions; not a proof";

#[derive(Clone, Debug, Serialize)]
pub struct ConditionProbe<S> {
    pub direction: UnitDirection<S>,
    /// Indices of the points tied at the minimum.
    pub face: Vec<usize>,
    /// Sorted projections `y_1 <= ... <= y_n`.
    pub projections: Vec<S>,
    /// `min over members of u'T - y_h`.
    pub margin: S,
    /// `y_{h+1} - y_h`.
    pub gap: S,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport<S> {
    pub h: usize,
    pub probes: Vec<ConditionProbe<S>>,
    pub min_margin: S,
    pub tolerance: S,
    pub holds_empirically: bool,
    pub note: &'static str,
}

/// Margins of `T(X)` along the probes of `(C_h)`.
///
/// For `h = k` the probes are all inward facet normals. For `h < k` they are
/// seeded samples from the normal cone of every `(h-1)`-dimensional hull face,
/// each admitted only after the `h`-tie pattern is verified.
pub fn condition_margin<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    h: usize,
    seed: u64,
) -> Result<ConditionReport<S>> {
    let k = x.k();
    if h == 0 || h > k {
        return Err(Error::InvalidParameter(format!("need 1 <= h <= k, got h = {h}")));
    }
    let gp = check_general_position(x);
    if !gp.holds {
        return Err(Error::NotGeneralPosition {
            witness: gp.witness.unwrap_or_default(),
        });
    }
    let facets = enumerate_facets(x)?;
    let directions = if h == k {
        facets.iter().map(|f| f.inward_normal.clone()).collect()
    } else {
        cone_directions(&facets, h, seed)?
    };
    let estimate = t.evaluate(x)?;
    let report = margins_along(&estimate, x, h, &directions)?;
    if report.probes.is_empty() {
        return Err(Error::NoAdmissibleDirection(h));
    }
    Ok(report)
}

/// Margins along caller-supplied directions, without the general-position
/// requirement. Directions whose `h` smallest projections are not tied (or
/// whose `(h+1)`-th is tied with them) are skipped. Allows `h > k`.
pub fn condition_margin_along<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    h: usize,
    directions: &[UnitDirection<S>],
) -> Result<ConditionReport<S>> {
    if h == 0 || h >= x.n() {
        return Err(Error::InvalidParameter(format!("need 1 <= h < n, got h = {h}")));
    }
    let estimate = t.evaluate(x)?;
    let report = margins_along(&estimate, x, h, directions)?;
    if report.probes.is_empty() {
        return Err(Error::NoAdmissibleDirection(h));
    }
    Ok(report)
}

fn margins_along<S: Scalar>(
    estimate: &EstimateSet<S>,
    x: &DataSet<S>,
    h: usize,
    directions: &[UnitDirection<S>],
) -> Result<ConditionReport<S>> {
    let tol = S::geometric_tolerance() * x.diameter();
    let mut probes = Vec::new();
    for u in directions {
        let proj = x.project(u.as_slice());
        let mut order: Vec<usize> = (0..x.n()).collect();
        order.sort_by(|&a, &b| proj[a].partial_cmp(&proj[b]).unwrap().then(a.cmp(&b)));
        let y: Vec<S> = order.iter().map(|&i| proj[i]).collect();
        if y[h - 1] - y[0] > tol || y[h] - y[h - 1] <= tol {
            continue;
        }
        let margin = estimate
            .members()
            .iter()
            .map(|m| linalg::dot(u.as_slice(), m) - y[h - 1])
            .fold(S::infinity(), S::min);
        let mut face: Vec<usize> = order[..h].to_vec();
        face.sort_unstable();
        probes.push(ConditionProbe {
            direction: u.clone(),
            face,
            gap: y[h] - y[h - 1],
            projections: y,
            margin,
        });
    }
    let min_margin = probes
        .iter()
        .map(|p| p.margin)
        .fold(S::infinity(), S::min);
    Ok(ConditionReport {
        h,
        holds_empirically: !probes.is_empty() && min_margin > tol,
        probes,
        min_margin,
        tolerance: tol,
        note: EMPIRICAL_NOTE,
    })
}

/// Positive combinations of the normals of the facets incident to each
/// `h`-point face.
fn cone_directions<S: Scalar>(
    facets: &[Facet<S>],
    h: usize,
    seed: u64,
) -> Result<Vec<UnitDirection<S>>> {
    let mut faces: Vec<Vec<usize>> = facets
        .iter()
        .flat_map(|f| linalg::Combinations::new(f.indices.len(), h).map(move |c| {
            c.into_iter().map(|i| f.indices[i]).collect::<Vec<_>>()
        }))
        .collect();
    faces.sort();
    faces.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(faces.len() * CONE_SAMPLES_PER_FACE);
    for face in &faces {
        let incident: Vec<&Facet<S>> = facets
            .iter()
            .filter(|f| face.iter().all(|i| f.indices.contains(i)))
            .collect();
        let k = incident[0].inward_normal.dim();
        for _ in 0..CONE_SAMPLES_PER_FACE {
            let mut v = vec![S::zero(); k];
            for f in &incident {
                // exponential weights: a uniform draw from the cone's simplex
                let w: f64 = -(1.0 - rng.random::<f64>()).ln();
                let w = S::lit(w.max(1e-12));
                for (vi, &ni) in v.iter_mut().zip(f.inward_normal.as_slice()) {
                    *vi += w * ni;
                }
            }
            if let Ok(u) = UnitDirection::normalize(v) {
                out.push(u);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthConditionReport {
    /// Minimum Tukey depth over the members of `T(X)`.
    pub depth: usize,
    /// False when the depth is a sampled upper bound (`k != 2`).
    pub exact: bool,
    pub satisfied: bool,
    /// When satisfied in exact mode: whether the `(C_k)` report holds, as
    /// the depth condition implies it.
    pub implies_boundary_condition: Option<bool>,
}

pub fn depth_condition<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    seed: u64,
) -> Result<DepthConditionReport> {
    let k = x.k();
    let exact = k == 2;
    let mode = if exact {
        DepthMode::Exact2d
    } else {
        DepthMode::Sampled(DirectionBudget::with_seed(seed))
    };
    let estimate = t.evaluate(x)?;
    let depth = estimate
        .members()
        .iter()
        .map(|m| tukey_depth(m, x, &mode))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .unwrap_or(0);
    let satisfied = depth > k;
    let implies_boundary_condition = if satisfied && exact {
        Some(condition_margin(t, x, k, seed)?.holds_empirically)
    } else {
        None
    };
    Ok(DepthConditionReport {
        depth,
        exact,
        satisfied,
        implies_boundary_condition,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport<S> {
    pub class: EquivarianceClass,
    pub trials: usize,
    pub max_discrepancy: S,
    /// Relative to `max(1, diam(g X), |g T(X)|)` of the worst trial.
    pub max_relative_discrepancy: S,
    pub tolerance: S,
    pub passed: bool,
}

/// Distance between `T(g X)` and `g T(X)`.
pub fn equivariance_discrepancy<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    g: &AffineMap<S>,
) -> Result<S> {
    let image = crate::geometry::apply_map(g, x)?;
    let lhs = t.evaluate(&image)?;
    let rhs = t.evaluate(x)?.map(g);
    Ok(lhs.discrepancy(&rhs))
}

pub const EQUIVARIANCE_TOLERANCE: f64 = 1e-8;

/// Random translations (and, for `Affine`, nonsingular matrices with
/// condition number at most `1e3`).
pub fn check_equivariance<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    class: EquivarianceClass,
    trials: usize,
    seed: u64,
) -> Result<EquivarianceReport<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = x.k();
    let spread = S::one().max(x.diameter());
    let mut max_abs = S::zero();
    let mut max_rel = S::zero();
    for _ in 0..trials {
        let b: Vec<S> = (0..k)
            .map(|_| S::lit(rng.random_range(-10.0..10.0)) * spread)
            .collect();
        let g = match class {
            EquivarianceClass::Translation => AffineMap::translation(b),
            EquivarianceClass::Affine => AffineMap::new(random_conditioned_matrix(k, &mut rng), b)?,
        };
        let image = crate::geometry::apply_map(&g, x)?;
        let lhs = t.evaluate(&image)?;
        let rhs = t.evaluate(x)?.map(&g);
        let d = lhs.discrepancy(&rhs);
        let scale = rhs
            .members()
            .iter()
            .map(|m| linalg::norm(m))
            .fold(S::one().max(image.diameter()), S::max);
        max_abs = max_abs.max(d);
        max_rel = max_rel.max(d / scale);
    }
    let tolerance = S::lit(EQUIVARIANCE_TOLERANCE);
    Ok(EquivarianceReport {
        class,
        trials,
        max_discrepancy: max_abs,
        max_relative_discrepancy: max_rel,
        tolerance,
        passed: max_rel <= tolerance,
    })
}

/// `U diag(s) V'` with Haar-ish orthogonal factors and singular values
/// log-uniform in `[10^-1.5, 10^1.5]`.
fn random_conditioned_matrix<S: Scalar>(k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<S>> {
    let u = random_orthogonal::<S>(k, rng);
    let v = random_orthogonal::<S>(k, rng);
    let s: Vec<S> = (0..k)
        .map(|_| S::lit(10f64.powf(rng.random_range(-1.5..1.5))))
        .collect();
    let us: Vec<Vec<S>> = u
        .iter()
        .map(|row| row.iter().zip(&s).map(|(&a, &b)| a * b).collect())
        .collect();
    let vt: Vec<Vec<S>> = (0..k).map(|i| (0..k).map(|j| v[j][i]).collect()).collect();
    linalg::mat_mul(&us, &vt)
}

fn random_orthogonal<S: Scalar>(k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<S>> {
    let mut cols: Vec<Vec<S>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<S> = (0..k)
            .map(|_| {
                let z: f64 = StandardNormal.sample(rng);
                S::lit(z)
            })
            .collect();
        for _ in 0..2 {
            for c in &cols {
                let d = linalg::dot(&v, c);
                for (vi, &ci) in v.iter_mut().zip(c) {
                    *vi -= d * ci;
                }
            }
        }
        let n = linalg::norm(&v);
        if n > S::lit(1e-6) {
            cols.push(linalg::scale(&v, S::one() / n));
        }
    }
    (0..k).map(|i| (0..k).map(|j| cols[j][i]).collect()).collect()
}
