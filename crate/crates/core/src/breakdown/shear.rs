//! The shear contamination attack against affine equivariant estimators.
//!
//! Construction: fix an `h`-subset `S` of a hull facet that separates the data
//! from nothing but leaves `T(X)` strictly inside, put the hyperplane `L`
//! through `S` (tilted off the rest of the facet when `h < k`), and split the
//! remaining points into `A` and `B`. Shearing parallel to `L` fixes `S` and
//! drags everything else along `e_2` in proportion to its distance from `L`.
//! Two contaminations are built per shear parameter `gamma`:
//! `S ∪ A ∪ g_gamma(B)` and `S ∪ g_-gamma(A) ∪ B`, which are images of each
//! other under `g_gamma`. An affine equivariant estimator that stays inside
//! the data cannot stay bounded on both.
//!
//! All shears are applied in the frame of `L`, where they only touch the
//! second coordinate; this keeps round trips exact up to a single rounding
//! even for `gamma = 1e8`.

use serde::Serialize;

use super::trace::{AttackRecord, AttackTrace, ContaminationFamily, Nudge, ShearSetup};
use crate::error::{Error, Result};
use crate::estimators::LocationEstimator;
use crate::geometry::{
    basis_from_normal, check_general_position, enumerate_facets, shear_transform, DataSet, Facet,
    OrthonormalBasis, UnitDirection,
};
use crate::linalg::{self, Combinations};
use crate::metric::estimate_set_distance;
use crate::scalar::Scalar;

/// How `X \ S` is split into the moved set `B` and the rest `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionRule {
    /// `B` = the points farthest from `L` (ties by index).
    LargestProjections,
    /// `B` = the points closest to `L`.
    SmallestProjections,
}

/// Largest relative nudge applied to a grid value to restore general position.
pub const MAX_NUDGE: f64 = 1e-6;
const NUDGE_STEPS: usize = 10;

pub fn default_gamma_grid<S: Scalar>() -> Vec<S> {
    (1..=8).map(|e| S::lit(10f64.powi(e))).collect()
}

#[derive(Clone, Debug)]
pub struct ShearAttackConfig<S> {
    pub h: usize,
    pub gamma_grid: Vec<S>,
    pub partition: PartitionRule,
    /// Index into [`admissible_facets`] (0 = farthest from the estimate).
    pub facet_rank: usize,
    /// Index into the lexicographic `h`-subsets of the facet's points.
    pub fixed_choice: usize,
    /// `|B|`; defaults to `floor((n - h + 1) / 2)`.
    pub moved_count: Option<usize>,
    pub threshold_factor: S,
}

impl<S: Scalar> ShearAttackConfig<S> {
    pub fn new(h: usize) -> Self {
        Self {
            h,
            gamma_grid: default_gamma_grid(),
            partition: PartitionRule::LargestProjections,
            facet_rank: 0,
            fixed_choice: 0,
            moved_count: None,
            threshold_factor: S::lit(1e6),
        }
    }
}

/// A facet of `conv(X)` that has the estimate strictly on its inner side.
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleFacet<S> {
    pub facet: Facet<S>,
    /// Distance of the estimate from the facet's hyperplane.
    pub estimate_distance: S,
}

/// Facets of `conv(X ∪ {theta})` not containing `theta`, i.e. hull facets of
/// `X` with `theta` strictly inside, ordered by decreasing distance to `theta`.
pub fn admissible_facets<S: Scalar>(x: &DataSet<S>, theta: &[S]) -> Result<Vec<AdmissibleFacet<S>>> {
    let tol = S::geometric_tolerance() * x.diameter();
    let mut out: Vec<AdmissibleFacet<S>> = enumerate_facets(x)?
        .into_iter()
        .filter_map(|f| {
            let d = linalg::dot(f.inward_normal.as_slice(), theta) - f.support_value;
            (d > tol).then_some(AdmissibleFacet {
                facet: f,
                estimate_distance: d,
            })
        })
        .collect();
    out.sort_by(|a, b| {
        b.estimate_distance
            .partial_cmp(&a.estimate_distance)
            .unwrap()
            .then_with(|| a.facet.indices.cmp(&b.facet.indices))
    });
    Ok(out)
}

/// Normal of a hyperplane through `fixed` that keeps every other data point
/// and `theta` strictly on the positive side. Equals the facet normal when
/// `fixed` is the whole facet; otherwise the facet normal is tilted toward
/// the facet points outside `fixed`.
fn separating_normal<S: Scalar>(
    x: &DataSet<S>,
    facet: &Facet<S>,
    fixed: &[usize],
    theta: &[S],
) -> Result<UnitDirection<S>> {
    let normal = facet.inward_normal.as_slice();
    if fixed.len() == facet.indices.len() {
        return Ok(facet.inward_normal.clone());
    }
    let s0 = x.point(fixed[0]);
    let others: Vec<usize> = facet
        .indices
        .iter()
        .copied()
        .filter(|&i| i != fixed[0])
        .collect();
    let diffs: Vec<Vec<S>> = others.iter().map(|&i| linalg::sub(x.point(i), s0)).collect();
    let gram: Vec<Vec<S>> = diffs
        .iter()
        .map(|a| diffs.iter().map(|b| linalg::dot(a, b)).collect())
        .collect();
    let target: Vec<S> = others
        .iter()
        .map(|i| if fixed.contains(i) { S::zero() } else { S::one() })
        .collect();
    let coef = linalg::solve(gram, target).ok_or(Error::NoAdmissibleFacet)?;
    let mut tilt = vec![S::zero(); x.k()];
    for (c, d) in coef.iter().zip(&diffs) {
        for (t, &v) in tilt.iter_mut().zip(d) {
            *t += *c * v;
        }
    }
    let tilt_norm = linalg::norm(&tilt);
    let mut step = S::one() / tilt_norm;
    let probes = x
        .points()
        .iter()
        .enumerate()
        .filter(|(i, _)| !facet.indices.contains(i))
        .map(|(_, p)| p.as_slice())
        .chain(std::iter::once(theta));
    for p in probes {
        let d = linalg::sub(p, s0);
        let base = linalg::dot(normal, &d);
        let lin = linalg::dot(&tilt, &d);
        if lin < S::zero() {
            step = step.min(S::lit(0.5) * base / -lin);
        }
    }
    let u: Vec<S> = normal
        .iter()
        .zip(&tilt)
        .map(|(&a, &b)| a + step * b)
        .collect();
    let u = UnitDirection::normalize(u)?;
    let tol = S::geometric_tolerance() * x.diameter();
    let positive = |p: &[S]| linalg::dot(u.as_slice(), &linalg::sub(p, s0)) > tol;
    let ok = (0..x.n())
        .filter(|i| !fixed.contains(i))
        .all(|i| positive(x.point(i)))
        && positive(theta);
    if ok {
        Ok(u)
    } else {
        Err(Error::NoAdmissibleFacet)
    }
}

#[inline]
fn shear_local<S: Scalar>(c: &[S], gamma: S) -> Vec<S> {
    let mut out = c.to_vec();
    out[1] += gamma * c[0];
    out
}

fn relative_gap<S: Scalar>(a: &[S], b: &[S], scale: &[S]) -> S {
    linalg::distance(a, b) / S::one().max(linalg::norm(scale))
}

struct Frame<S> {
    basis: OrthonormalBasis<S>,
    local: Vec<Vec<S>>,
    fixed: Vec<usize>,
    moved_a: Vec<usize>,
    moved_b: Vec<usize>,
}

/// Runs both shear contamination families over `config.gamma_grid`.
pub fn shear_attack<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    config: &ShearAttackConfig<S>,
) -> Result<AttackTrace<S>> {
    let (n, k, h) = (x.n(), x.k(), config.h);
    if k < 2 {
        return Err(Error::InvalidParameter("shear attack needs k >= 2".into()));
    }
    if h == 0 || h > k {
        return Err(Error::InvalidParameter(format!("need 1 <= h <= k, got h = {h}")));
    }
    if config.gamma_grid.is_empty() {
        return Err(Error::InvalidParameter("empty gamma grid".into()));
    }
    let gp = check_general_position(x);
    if !gp.holds {
        return Err(Error::NotGeneralPosition {
            witness: gp.witness.unwrap_or_default(),
        });
    }
    let m = config.moved_count.unwrap_or((n - h + 1) / 2);
    if m == 0 || m > n - h {
        return Err(Error::InvalidParameter(format!(
            "moved count {m} outside [1, n - h = {}]",
            n - h
        )));
    }

    let base = t.evaluate(x)?;
    let theta = base.canonical().to_vec();
    let facets = admissible_facets(x, &theta)?;
    if facets.is_empty() {
        return Err(Error::NoAdmissibleFacet);
    }
    let chosen = facets.get(config.facet_rank).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "facet rank {} but only {} admissible facets",
            config.facet_rank,
            facets.len()
        ))
    })?;
    let fixed: Vec<usize> = Combinations::new(k, h)
        .nth(config.fixed_choice)
        .ok_or_else(|| Error::InvalidParameter("fixed-subset choice out of range".into()))?
        .into_iter()
        .map(|i| chosen.facet.indices[i])
        .collect();
    let normal = separating_normal(x, &chosen.facet, &fixed, &theta)?;
    let frame = build_frame(x, normal, fixed, m, config.partition)?;

    let threshold = config.threshold_factor * x.diameter();
    let include_a = frame.moved_a.len() <= m;
    let padding: Vec<usize> = frame.moved_b[..m.saturating_sub(frame.moved_a.len())].to_vec();

    let mut trace = AttackTrace {
        family: "shear",
        estimator: t.name().to_string(),
        n,
        k,
        h: Some(h),
        m,
        grid: config.gamma_grid.clone(),
        records: Vec::new(),
        distances: Vec::new(),
        max_distance: S::zero(),
        divergence_threshold: threshold,
        diverged: false,
        witness: None,
        setup: Some(ShearSetup {
            facet: chosen.facet.indices.clone(),
            fixed: frame.fixed.clone(),
            moved_a: frame.moved_a.clone(),
            moved_b: frame.moved_b.clone(),
            normal: frame.basis.axis(0).to_vec(),
            shear_axis: frame.basis.axis(1).to_vec(),
            origin: frame.basis.origin().to_vec(),
            estimate_offset: frame.basis.to_local(&theta)[0],
        }),
        nudges: Vec::new(),
        skipped: Vec::new(),
        max_identity_residual: S::zero(),
        max_group_residual: S::zero(),
    };

    let sheared = |idx: &[usize], gamma: S| -> Vec<Vec<S>> {
        idx.iter()
            .map(|&i| frame.basis.to_ambient(&shear_local(&frame.local[i], gamma)))
            .collect()
    };

    for (gi, &requested) in config.gamma_grid.iter().enumerate() {
        let mut found = None;
        for step in 0..=NUDGE_STEPS {
            let gamma = requested
                * (S::one() + S::lit(MAX_NUDGE) * S::from_count(step) / S::from_count(NUDGE_STEPS));
            if sheared_general_position(&frame, gamma) {
                let repl = sheared(&frame.moved_b, gamma);
                let xb = x.with_replaced(&frame.moved_b, &repl)?;
                found = Some((gamma, repl, xb));
                break;
            }
        }
        let Some((gamma, repl_b, xb)) = found else {
            trace.skipped.push(requested);
            continue;
        };
        if gamma != requested {
            trace.nudges.push(Nudge {
                requested,
                used: gamma,
            });
        }

        trace.max_identity_residual = trace
            .max_identity_residual
            .max(identity_residual(x, &frame, gamma, &repl_b)?);
        trace.max_group_residual = trace
            .max_group_residual
            .max(group_residual(&frame.basis, gamma)?);

        let est = t.evaluate(&xb)?;
        trace.records.push(AttackRecord {
            family: ContaminationFamily::ShearB,
            grid_index: gi,
            parameter: gamma,
            replaced: frame.moved_b.clone(),
            replacements: repl_b,
            distance: estimate_set_distance(&est, &base),
            estimate: est,
        });

        if include_a {
            let mut replaced = frame.moved_a.clone();
            let mut repl = sheared(&frame.moved_a, -gamma);
            for &i in &padding {
                replaced.push(i);
                repl.push(x.point(i).to_vec());
            }
            let xa = x.with_replaced(&replaced, &repl)?;
            let est = t.evaluate(&xa)?;
            trace.records.push(AttackRecord {
                family: ContaminationFamily::ShearA,
                grid_index: gi,
                parameter: gamma,
                replaced,
                replacements: repl,
                distance: estimate_set_distance(&est, &base),
                estimate: est,
            });
        }
    }
    if trace.records.is_empty() {
        return Err(Error::GeneralPositionUnrecoverable);
    }
    trace.finish();
    Ok(trace)
}

fn build_frame<S: Scalar>(
    x: &DataSet<S>,
    normal: UnitDirection<S>,
    fixed: Vec<usize>,
    m: usize,
    rule: PartitionRule,
) -> Result<Frame<S>> {
    let basis = basis_from_normal(&normal, x.point(fixed[0]).to_vec())?;
    let mut local: Vec<Vec<S>> = x.points().iter().map(|p| basis.to_local(p)).collect();
    // S lies on L by construction; drop the rounding residue
    for &i in &fixed {
        local[i][0] = S::zero();
    }
    let mut rest: Vec<usize> = (0..x.n()).filter(|i| !fixed.contains(i)).collect();
    rest.sort_by(|&a, &b| local[a][0].partial_cmp(&local[b][0]).unwrap().then(a.cmp(&b)));
    let split = match rule {
        PartitionRule::LargestProjections => rest.len() - m,
        PartitionRule::SmallestProjections => m,
    };
    let (lo, hi) = rest.split_at(split);
    let (mut moved_a, mut moved_b) = match rule {
        PartitionRule::LargestProjections => (lo.to_vec(), hi.to_vec()),
        PartitionRule::SmallestProjections => (hi.to_vec(), lo.to_vec()),
    };
    moved_a.sort_unstable();
    moved_b.sort_unstable();
    Ok(Frame {
        basis,
        local,
        fixed,
        moved_a,
        moved_b,
    })
}

/// General position of `S ∪ A ∪ g_gamma(B)`, decided in the frame of `L`.
/// The determinant of any `k + 1` of these points is affine in `gamma`,
/// `d0 + gamma d1`, and both parts are computed at the scale of the original
/// data, so thin but genuine configurations at large `gamma` are resolved.
/// `S ∪ g_-gamma(A) ∪ B` is its image under `g_-gamma` and needs no check.
fn sheared_general_position<S: Scalar>(frame: &Frame<S>, gamma: S) -> bool {
    let k = frame.basis.dim();
    let homogeneous = |i: usize| {
        let mut r = Vec::with_capacity(k + 1);
        r.push(S::one());
        r.extend_from_slice(&frame.local[i]);
        r
    };
    for sub in Combinations::new(frame.local.len(), k + 1) {
        let rows0: Vec<Vec<S>> = sub.iter().map(|&i| homogeneous(i)).collect();
        let rows1: Vec<Vec<S>> = sub
            .iter()
            .zip(&rows0)
            .map(|(&i, r)| {
                let mut r = r.clone();
                r[2] = if frame.moved_b.contains(&i) {
                    frame.local[i][0]
                } else {
                    S::zero()
                };
                r
            })
            .collect();
        let d0 = linalg::det(rows0);
        let d1 = gamma * linalg::det(rows1);
        if (d0 + d1).abs() <= S::geometric_tolerance() * (d0.abs() + d1.abs()) {
            return false;
        }
    }
    true
}

/// Checks `S ∪ A ∪ g_gamma(B) = g_gamma(S ∪ g_-gamma(A) ∪ B)` pointwise in the
/// frame of `L`, and that the ambient map agrees with the frame computation.
fn identity_residual<S: Scalar>(
    x: &DataSet<S>,
    frame: &Frame<S>,
    gamma: S,
    repl_b: &[Vec<S>],
) -> Result<S> {
    let mut worst = S::zero();
    for i in 0..x.n() {
        let c = &frame.local[i];
        let (lhs, pre) = if frame.moved_b.contains(&i) {
            (shear_local(c, gamma), c.clone())
        } else if frame.moved_a.contains(&i) {
            (c.clone(), shear_local(c, -gamma))
        } else {
            (c.clone(), c.clone())
        };
        let rhs = shear_local(&pre, gamma);
        worst = worst.max(relative_gap(&lhs, &rhs, &pre));
    }
    let g = shear_transform(gamma, &frame.basis)?;
    for (&i, r) in frame.moved_b.iter().zip(repl_b) {
        worst = worst.max(relative_gap(&g.apply(x.point(i)), r, r));
    }
    Ok(worst)
}

/// Entrywise residual of `g_gamma ∘ g_1` against `g_(gamma + 1)`, relative to
/// the product of the factor sizes `(1 + |gamma|)(1 + 1)`.
fn group_residual<S: Scalar>(basis: &OrthonormalBasis<S>, gamma: S) -> Result<S> {
    let lhs = shear_transform(gamma, basis)?.compose(&shear_transform(S::one(), basis)?);
    let rhs = shear_transform(gamma + S::one(), basis)?;
    Ok(lhs.max_abs_diff(&rhs) / (S::lit(2.0) * (S::one() + gamma.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::{Mcd, WeightedMean};

    fn demo() -> DataSet<f64> {
        DataSet::new(vec![
            vec![0.0, 0.0],
            vec![4.0, 0.5],
            vec![1.0, 3.5],
            vec![3.2, 3.0],
            vec![2.1, 1.2],
            vec![1.4, 2.2],
            vec![2.9, 1.9],
        ])
        .unwrap()
    }

    #[test]
    fn zero_shear_reproduces_the_data() {
        let x = demo();
        let mut cfg = ShearAttackConfig::new(2);
        cfg.gamma_grid = vec![0.0];
        let tr = shear_attack(&WeightedMean::centroid(), &x, &cfg).unwrap();
        assert_eq!(tr.records.len(), 2);
        for r in &tr.records {
            assert!(r.distance < 1e-12);
            assert_eq!(r.replaced.len(), tr.m);
        }
    }

    #[test]
    fn replaced_points_travel_gamma_times_height() {
        let x = demo();
        let mut cfg = ShearAttackConfig::new(2);
        cfg.gamma_grid = vec![3.0, 250.0];
        let tr = shear_attack(&WeightedMean::centroid(), &x, &cfg).unwrap();
        let setup = tr.setup.as_ref().unwrap();
        for r in tr.records.iter().filter(|r| r.family == ContaminationFamily::ShearB) {
            for (&i, p) in r.replaced.iter().zip(&r.replacements) {
                let height = linalg::dot(&setup.normal, &linalg::sub(x.point(i), &setup.origin));
                let travel = linalg::distance(p, x.point(i));
                assert!((travel - r.parameter * height).abs() <= 1e-9 * travel.max(1.0));
            }
        }
    }

    #[test]
    fn centroid_diverges_under_shear() {
        let tr = shear_attack(&WeightedMean::centroid(), &demo(), &ShearAttackConfig::new(2)).unwrap();
        assert!(tr.diverged);
        assert!(tr.max_identity_residual <= 1e-9);
        assert!(tr.max_group_residual <= 1e-9);
    }

    #[test]
    fn partition_sizes() {
        let x = demo();
        for h in 1..=2 {
            for rule in [PartitionRule::LargestProjections, PartitionRule::SmallestProjections] {
                let mut cfg = ShearAttackConfig::new(h);
                cfg.partition = rule;
                cfg.gamma_grid = vec![10.0];
                let tr = shear_attack(&Mcd::default(), &x, &cfg).unwrap();
                let s = tr.setup.unwrap();
                assert_eq!(s.fixed.len(), h);
                assert_eq!(s.moved_b.len(), (7 - h + 1) / 2);
                assert_eq!(s.moved_a.len() + s.moved_b.len() + h, 7);
            }
        }
    }

    #[test]
    fn tilted_plane_for_lower_h_separates_the_rest() {
        let x = demo();
        let mut cfg = ShearAttackConfig::new(1);
        cfg.gamma_grid = vec![1.0];
        let tr = shear_attack(&WeightedMean::centroid(), &x, &cfg).unwrap();
        let s = tr.setup.unwrap();
        for i in 0..x.n() {
            let c = linalg::dot(&s.normal, &linalg::sub(x.point(i), &s.origin));
            if s.fixed.contains(&i) {
                assert!(c.abs() < 1e-12);
            } else {
                assert!(c > 0.0);
            }
        }
        assert!(s.estimate_offset > 0.0);
    }

    #[test]
    fn admissible_facets_exclude_those_facing_the_estimate() {
        let x = demo();
        let all = enumerate_facets(&x).unwrap().len();
        let inside = admissible_facets(&x, &x.centroid()).unwrap();
        assert_eq!(inside.len(), all);
        assert!(inside
            .windows(2)
            .all(|w| w[0].estimate_distance >= w[1].estimate_distance));
        let far = admissible_facets(&x, &[100.0, 100.0]).unwrap();
        assert!(!far.is_empty() && far.len() < all);
    }
}
