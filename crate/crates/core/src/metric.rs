//! Distance between univariate samples and between estimate sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::depth::{univariate_median, MedianInterval};
use crate::error::{Error, Result};
use crate::estimators::EstimateSet;
use crate::linalg;
use crate::scalar::Scalar;

/// `min over permutations pi of max_i |x_i - y_pi(i)|`, evaluated through the
/// sorted matching `max_i |x_(i) - y_(i)|`.
pub fn sample_distance<S: Scalar>(x: &[S], y: &[S]) -> Result<S> {
    if x.len() != y.len() {
        return Err(Error::InvalidParameter(format!(
            "sample lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(xs
        .iter()
        .zip(&ys)
        .fold(S::zero(), |acc, (&a, &b)| acc.max((a - b).abs())))
}

/// Supremum of the Euclidean distance over all member pairs. Not a matching:
/// a set with two distinct members is at positive distance from itself.
pub fn estimate_set_distance<S: Scalar>(a: &EstimateSet<S>, b: &EstimateSet<S>) -> S {
    let mut d = S::zero();
    for p in a.members() {
        for q in b.members() {
            d = d.max(linalg::distance(p, q));
        }
    }
    d
}

/// Largest endpoint shift of `estimator` over `trials` seeded perturbations of
/// `x`, each point moved independently by at most `delta`.
pub fn lipschitz_probe<S, F>(estimator: F, x: &[S], delta: S, trials: usize, seed: u64) -> Result<S>
where
    S: Scalar,
    F: Fn(&[S]) -> Result<MedianInterval<S>>,
{
    if delta < S::zero() {
        return Err(Error::InvalidParameter("delta must be nonnegative".into()));
    }
    let base = estimator(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = delta.to_f64().unwrap_or(0.0);
    let mut worst = S::zero();
    for _ in 0..trials {
        let y: Vec<S> = x
            .iter()
            .map(|&v| {
                let s = if d > 0.0 { rng.random_range(-d..=d) } else { 0.0 };
                // clamp so rounding in the conversion never exceeds delta
                v + S::lit(s).max(-delta).min(delta)
            })
            .collect();
        let m = estimator(&y)?;
        worst = worst
            .max((m.low - base.low).abs())
            .max((m.high - base.high).abs());
    }
    Ok(worst)
}

/// The median as an estimator for [`lipschitz_probe`].
pub fn median_estimator<S: Scalar>(x: &[S]) -> Result<MedianInterval<S>> {
    univariate_median(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permuted_samples_are_at_distance_zero() {
        assert_eq!(sample_distance(&[3.0, 1.0, 2.0], &[1.0, 2.0, 3.0]).unwrap(), 0.0);
    }

    #[test]
    fn two_point_example() {
        // brute force: identity pairing max(9, 9) = 9, swapped pairing max(1, 1) = 1
        assert_eq!(sample_distance(&[0.0, 10.0], &[9.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn length_mismatch() {
        assert!(sample_distance(&[0.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn estimate_set_sup_over_pairs() {
        let a = EstimateSet::single(vec![0.0]);
        let b = EstimateSet::single(vec![3.0]);
        assert_eq!(estimate_set_distance(&a, &a), 0.0);
        assert_eq!(estimate_set_distance(&a, &b), 3.0);
        let two = EstimateSet::new(vec![vec![0.0], vec![1.0]], vec![0.5]).unwrap();
        assert_eq!(estimate_set_distance(&two, &two), 1.0);
    }

    #[test]
    fn lipschitz_probe_cases() {
        let x = [1.0, 2.0, 3.0];
        assert_eq!(lipschitz_probe(median_estimator, &x, 0.0, 20, 1).unwrap(), 0.0);
        // uniform shift by delta moves the median by exactly delta
        let shifted = |v: &[f64]| univariate_median(&v.iter().map(|a| a + 0.25).collect::<Vec<_>>());
        let base = univariate_median(&x).unwrap();
        assert_eq!(shifted(&x).unwrap().low - base.low, 0.25);
        let nine: Vec<f64> = (0..9).map(|i| (i * i) as f64 * 0.3 - 2.0).collect();
        let worst = lipschitz_probe(median_estimator, &nine, 0.5, 1000, 42).unwrap();
        assert!(worst <= 0.5 + 1e-12);
    }
}
