use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::geometry::{hyperplane_normal, DataSet, UnitDirection};
use crate::linalg::Combinations;
use crate::scalar::Scalar;

/// Which directions are probed when a supremum over `u` is approximated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionBudget {
    pub random_count: usize,
    /// Adds the normals of all hyperplanes through `k` data points.
    pub include_data_directions: bool,
    pub seed: u64,
}

impl DirectionBudget {
    pub const DEFAULT_RANDOM_COUNT: usize = 2000;

    /// 2000 seeded random directions plus data-derived normals.
    pub fn with_seed(seed: u64) -> Self {
        Self {
            random_count: Self::DEFAULT_RANDOM_COUNT,
            include_data_directions: true,
            seed,
        }
    }

    /// The probed direction set for `x`. Fixed before any evaluation.
    pub fn directions<S: Scalar>(&self, x: &DataSet<S>) -> Vec<UnitDirection<S>> {
        let mut dirs = random_directions(x.k(), self.random_count, self.seed);
        if self.include_data_directions {
            dirs.extend(data_directions(x));
        }
        dirs
    }
}

/// Seeded uniform directions on the sphere (normalized Gaussians).
pub fn random_directions<S: Scalar>(k: usize, count: usize, seed: u64) -> Vec<UnitDirection<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<S> = (0..k)
            .map(|_| {
                let z: f64 = StandardNormal.sample(&mut rng);
                S::lit(z)
            })
            .collect();
        if let Ok(u) = UnitDirection::normalize(v) {
            out.push(u);
        }
    }
    out
}

/// Normals to the hyperplanes through every `k`-subset of the data.
/// In one dimension this is the single direction `+1`.
pub fn data_directions<S: Scalar>(x: &DataSet<S>) -> Vec<UnitDirection<S>> {
    let k = x.k();
    if k == 1 {
        return vec![UnitDirection::axis(1, 0)];
    }
    Combinations::new(x.n(), k)
        .filter_map(|subset| {
            let pts: Vec<&[S]> = subset.iter().map(|&i| x.point(i)).collect();
            UnitDirection::normalize(hyperplane_normal(&pts)).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_directions_are_reproducible_and_unit() {
        let a: Vec<UnitDirection<f64>> = random_directions(3, 50, 7);
        let b: Vec<UnitDirection<f64>> = random_directions(3, 50, 7);
        assert_eq!(a, b);
        for u in &a {
            let n: f64 = u.as_slice().iter().map(|x| x * x).sum();
            assert!((n.sqrt() - 1.0).abs() < 1e-12);
        }
        let c: Vec<UnitDirection<f64>> = random_directions(3, 50, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn data_directions_count() {
        let x = DataSet::new(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        assert_eq!(data_directions(&x).len(), 6);
        let b = DirectionBudget {
            random_count: 10,
            include_data_directions: true,
            seed: 1,
        };
        assert_eq!(b.directions(&x).len(), 16);
    }
}
