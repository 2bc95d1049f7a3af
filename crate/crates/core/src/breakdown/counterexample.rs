//! A planar data set on which a projection-depth median is pulled to the
//! origin while every hull facet stays at a fixed distance from it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{check_general_position, DataSet};
use crate::scalar::Scalar;

/// Number of noise redraws before giving up on general position.
pub const REDRAW_BUDGET: usize = 1000;
pub const DEFAULT_NOISE_SCALE: f64 = 0.1;

/// `n = 2m + 2` points: `(0, ±delta)`, then `(x_i, x_i + delta u_i)` and the
/// mirror images `(x_i, -(x_i + delta u_i))` with `x_i` equispaced on
/// `[10, 20]` and `u_i` uniform on `[-noise_scale, noise_scale]`.
pub fn pm_counterexample<S: Scalar>(
    m: usize,
    delta: S,
    noise_scale: S,
    seed: u64,
) -> Result<DataSet<S>> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("need m >= 2, got {m}")));
    }
    if !(delta > S::zero() && delta < S::one()) {
        return Err(Error::InvalidParameter("delta must lie in (0, 1)".into()));
    }
    if !(noise_scale > S::zero()) || !noise_scale.is_finite() {
        return Err(Error::InvalidParameter("noise scale must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = noise_scale.to_f64().unwrap();
    for _ in 0..REDRAW_BUDGET {
        let mut pts = vec![vec![S::zero(), delta], vec![S::zero(), -delta]];
        let mut lower = Vec::with_capacity(m);
        for i in 0..m {
            let xi = S::lit(10.0) + S::lit(10.0) * S::from_count(i) / S::from_count(m - 1);
            let u = S::lit(rng.random_range(-a..=a));
            let yi = xi + delta * u;
            pts.push(vec![xi, yi]);
            lower.push(vec![xi, -yi]);
        }
        pts.extend(lower);
        let x = DataSet::new(pts)?;
        if check_general_position(&x).holds {
            return Ok(x);
        }
    }
    Err(Error::GeneralPositionUnrecoverable)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_general_position() {
        let z = pm_counterexample(10, 0.01, 0.1, 3).unwrap();
        assert_eq!(z.n(), 22);
        assert!(check_general_position(&z).holds);
        assert_eq!(z.point(0), &[0.0, 0.01]);
        assert_eq!(z.point(1), &[0.0, -0.01]);
        assert_eq!(z.point(2)[0], 10.0);
        assert_eq!(z.point(11)[0], 20.0);
    }

    #[test]
    fn mirror_symmetric_in_the_x_axis() {
        let z = pm_counterexample(6, 0.1, 0.5, 9).unwrap();
        let mut a: Vec<(f64, f64)> = z.points().iter().map(|p| (p[0], p[1])).collect();
        let mut b: Vec<(f64, f64)> = z.points().iter().map(|p| (p[0], -p[1])).collect();
        a.sort_by(|p, q| p.partial_cmp(q).unwrap());
        b.sort_by(|p, q| p.partial_cmp(q).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn diagonal_projections_collapse() {
        // on (1, 1)/sqrt 2 the two centre points and the m mirrored points
        // project to O(delta)
        let m = 8;
        let delta = 1e-4;
        let z = pm_counterexample(m, delta, 0.1, 5).unwrap();
        let s = 0.5f64.sqrt();
        let small = z
            .points()
            .iter()
            .filter(|p| ((p[0] + p[1]) * s).abs() < 10.0 * delta)
            .count();
        assert_eq!(small, m + 2);
    }

    #[test]
    fn seeded_and_validated() {
        let a = pm_counterexample::<f64>(4, 0.1, 0.1, 1).unwrap();
        let b = pm_counterexample::<f64>(4, 0.1, 0.1, 1).unwrap();
        assert_eq!(a.points(), b.points());
        assert!(pm_counterexample::<f64>(1, 0.1, 0.1, 1).is_err());
        assert!(pm_counterexample::<f64>(4, 1.5, 0.1, 1).is_err());
        assert!(pm_counterexample::<f64>(4, 0.1, 0.0, 1).is_err());
    }
}
