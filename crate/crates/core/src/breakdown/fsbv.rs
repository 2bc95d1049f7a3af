//! Empirical breakdown certification: run an attack suite for growing `m`
//! and report the smallest contamination count that carried the estimate
//! past the divergence threshold.

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::Fraction;
use super::shear::{
    default_gamma_grid, shear_attack, PartitionRule, ShearAttackConfig,
};
use super::trace::AttackTrace;
use super::translation::{default_radius_grid, translation_attack, TranslationAttackConfig};
use crate::depth::random_directions;
use crate::error::{Error, Result};
use crate::estimators::LocationEstimator;
use crate::geometry::{enumerate_facets, DataSet, UnitDirection};
use crate::linalg::binomial;
use crate::scalar::Scalar;

/// Label attached to every contamination count the suite failed to break.
pub const SURVIVED_NOTE: &str = "no attack in suite succeeded";

/// Smallest accepted divergence factor.
pub const MIN_THRESHOLD_FACTOR: f64 = 1e3;

#[derive(Clone, Debug)]
pub struct AttackSuite<S> {
    pub gamma_grid: Vec<S>,
    pub radius_grid: Vec<S>,
    pub threshold_factor: S,
    /// Maximum number of (facet, fixed subset) choices per `(h, m)`; each
    /// choice is run with both partition rules.
    pub shear_budget: usize,
    /// Seeded random directions added to `±` coordinate axes for the
    /// translation attack.
    pub random_directions: usize,
    pub seed: u64,
    pub shear: bool,
    pub translation: bool,
    /// Largest `m` tried; defaults to `ceil(n / 2)`.
    pub max_m: Option<usize>,
    /// Stop after the first broken `m`.
    pub stop_at_first_break: bool,
}

impl<S: Scalar> AttackSuite<S> {
    pub fn new(seed: u64) -> Self {
        Self {
            gamma_grid: default_gamma_grid(),
            radius_grid: default_radius_grid(),
            threshold_factor: S::lit(1e6),
            shear_budget: 64,
            random_directions: 4,
            seed,
            shear: true,
            translation: true,
            max_m: None,
            stop_at_first_break: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    Broken,
    Survived,
}

#[derive(Clone, Debug, Serialize)]
pub struct BreakdownCertificate<S> {
    pub m: usize,
    pub n: usize,
    pub status: CertificateStatus,
    /// First trace (in suite order) that crossed the threshold.
    pub witness: Option<AttackTrace<S>>,
    pub attack_families_tried: Vec<String>,
    pub attacks_run: usize,
    /// Attack configurations that could not be built (no admissible
    /// hyperplane, or general position lost on the whole grid).
    pub attacks_skipped: usize,
    /// Largest distance seen over every attack at this `m`.
    pub max_distance: S,
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FsbvResult {
    Fraction(Fraction),
    /// Nothing broke for any `m <= tested_up_to`; not a lower bound.
    NotBroken { tested_up_to: usize, note: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct FsbvReport<S> {
    pub estimator: String,
    pub n: usize,
    pub k: usize,
    pub divergence_threshold: S,
    pub result: FsbvResult,
    pub certificates: Vec<BreakdownCertificate<S>>,
}

#[derive(Clone, Debug)]
enum Plan<S> {
    Shear(ShearAttackConfig<S>),
    Translation(usize, TranslationAttackConfig<S>),
}

impl<S: Scalar> Plan<S> {
    fn label(&self) -> String {
        match self {
            Plan::Shear(c) => format!(
                "shear(h={}, facet={}, subset={}, {})",
                c.h,
                c.facet_rank,
                c.fixed_choice,
                match c.partition {
                    PartitionRule::LargestProjections => "largest",
                    PartitionRule::SmallestProjections => "smallest",
                }
            ),
            Plan::Translation(j, _) => format!("translation_cluster(direction={j})"),
        }
    }

    fn run(&self, t: &dyn LocationEstimator<S>, x: &DataSet<S>) -> Result<Option<AttackTrace<S>>> {
        let out = match self {
            Plan::Shear(c) => shear_attack(t, x, c),
            Plan::Translation(_, c) => translation_attack(t, x, c),
        };
        match out {
            Ok(tr) => Ok(Some(tr)),
            Err(
                Error::NoAdmissibleFacet
                | Error::GeneralPositionUnrecoverable
                | Error::InvalidParameter(_),
            ) if matches!(self, Plan::Shear(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }
}

fn translation_directions<S: Scalar>(k: usize, extra: usize, seed: u64) -> Vec<UnitDirection<S>> {
    let mut dirs = Vec::new();
    for j in 0..k {
        let e = UnitDirection::axis(k, j);
        dirs.push(e.negated());
        dirs.push(e);
    }
    if k > 1 {
        dirs.extend(random_directions(k, extra, seed));
    }
    dirs
}

fn plans<S: Scalar>(
    x: &DataSet<S>,
    m: usize,
    suite: &AttackSuite<S>,
    facet_count: usize,
) -> Vec<Plan<S>> {
    let (n, k) = (x.n(), x.k());
    let mut out = Vec::new();
    if suite.shear && k >= 2 {
        for h in 1..=k {
            if m > n - h {
                continue;
            }
            let subsets = binomial(k, h) as usize;
            let choices = (0..facet_count)
                .flat_map(|f| (0..subsets).map(move |s| (f, s)))
                .take(suite.shear_budget);
            for (facet_rank, fixed_choice) in choices {
                for partition in [
                    PartitionRule::LargestProjections,
                    PartitionRule::SmallestProjections,
                ] {
                    out.push(Plan::Shear(ShearAttackConfig {
                        h,
                        gamma_grid: suite.gamma_grid.clone(),
                        partition,
                        facet_rank,
                        fixed_choice,
                        moved_count: Some(m),
                        threshold_factor: suite.threshold_factor,
                    }));
                }
            }
        }
    }
    if suite.translation {
        let dirs = translation_directions(k, suite.random_directions, suite.seed);
        for (j, direction) in dirs.into_iter().enumerate() {
            out.push(Plan::Translation(j, TranslationAttackConfig {
                direction,
                m,
                radius_grid: suite.radius_grid.clone(),
                threshold_factor: suite.threshold_factor,
            }));
        }
    }
    out
}

/// Certificates for `m = 1..=max_m`. The fraction is the smallest broken `m`
/// over `n`; if none broke the result says so instead of guessing.
pub fn empirical_fsbv<S: Scalar>(
    t: &dyn LocationEstimator<S>,
    x: &DataSet<S>,
    suite: &AttackSuite<S>,
) -> Result<FsbvReport<S>> {
    if !suite.shear && !suite.translation {
        return Err(Error::InvalidParameter("attack suite is empty".into()));
    }
    if suite.threshold_factor < S::lit(MIN_THRESHOLD_FACTOR) {
        return Err(Error::InvalidParameter(format!(
            "threshold factor must be at least {MIN_THRESHOLD_FACTOR}"
        )));
    }
    let n = x.n();
    let max_m = suite.max_m.unwrap_or(n.div_ceil(2)).min(n);
    let facet_count = if suite.shear && x.k() >= 2 {
        enumerate_facets(x)?.len()
    } else {
        0
    };
    let threshold = suite.threshold_factor * x.diameter();
    let mut certificates = Vec::new();
    let mut broken_at = None;
    for m in 1..=max_m {
        let plans = plans(x, m, suite, facet_count);
        let runs: Vec<Option<AttackTrace<S>>> = plans
            .par_iter()
            .map(|p| p.run(t, x))
            .collect::<Result<_>>()?;
        let mut tried: Vec<String> = Vec::new();
        let mut skipped = 0;
        let mut max_distance = S::zero();
        let mut witness = None;
        for (plan, run) in plans.iter().zip(runs) {
            let Some(trace) = run else {
                skipped += 1;
                continue;
            };
            let label = plan.label();
            if !tried.contains(&label) {
                tried.push(label);
            }
            max_distance = max_distance.max(trace.max_distance);
            if witness.is_none() && trace.diverged {
                witness = Some(trace);
            }
        }
        let status = if witness.is_some() {
            CertificateStatus::Broken
        } else {
            CertificateStatus::Survived
        };
        certificates.push(BreakdownCertificate {
            m,
            n,
            status,
            attacks_run: tried.len(),
            attack_families_tried: tried,
            attacks_skipped: skipped,
            max_distance,
            note: (status == CertificateStatus::Survived).then_some(SURVIVED_NOTE),
            witness,
        });
        if status == CertificateStatus::Broken {
            broken_at.get_or_insert(m);
            if suite.stop_at_first_break {
                break;
            }
        }
    }
    let result = match broken_at {
        Some(m) => FsbvResult::Fraction(Fraction::new(m as u64, n as u64)),
        None => FsbvResult::NotBroken {
            tested_up_to: max_m,
            note: SURVIVED_NOTE.to_string(),
        },
    };
    Ok(FsbvReport {
        estimator: t.name().to_string(),
        n,
        k: x.k(),
        divergence_threshold: threshold,
        result,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::{CoordinatewiseMedian, WeightedMean};

    #[test]
    fn mean_breaks_with_one_point() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.5, 3.0]).unwrap();
        let r = empirical_fsbv(&WeightedMean::centroid(), &x, &AttackSuite::new(1)).unwrap();
        assert_eq!(r.result, FsbvResult::Fraction(Fraction::new(1, 4)));
        assert_eq!(r.certificates.len(), 1);
        assert!(r.certificates[0].witness.is_some());
    }

    #[test]
    fn short_range_reports_marker_not_fraction() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.5, 3.0, 7.0]).unwrap();
        let mut suite = AttackSuite::new(1);
        suite.max_m = Some(2);
        let r = empirical_fsbv(&CoordinatewiseMedian, &x, &suite).unwrap();
        assert!(matches!(r.result, FsbvResult::NotBroken { tested_up_to: 2, .. }));
        for c in &r.certificates {
            assert_eq!(c.status, CertificateStatus::Survived);
            assert_eq!(c.note, Some(SURVIVED_NOTE));
            assert!(c.witness.is_none());
        }
    }

    #[test]
    fn low_threshold_rejected() {
        let x = DataSet::from_values(&[0.0, 1.0, 2.0]).unwrap();
        let mut suite = AttackSuite::new(1);
        suite.threshold_factor = 10.0;
        assert!(empirical_fsbv(&CoordinatewiseMedian, &x, &suite).is_err());
    }
}
