use super::{AffineMap, DataSet, OrthonormalBasis, UnitDirection};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

/// Completes `u` to an orthonormal basis with `e_1 = u`.
///
/// The remaining axes come from Gram-Schmidt on the standard basis, taken in
/// order of increasing `|u_j|` (ties by index); the axis most parallel to `u`
/// is dropped. The result is fully determined by `u`.
pub fn basis_from_normal<S: Scalar>(
    u: &UnitDirection<S>,
    origin: Vec<S>,
) -> Result<OrthonormalBasis<S>> {
    let k = u.dim();
    if origin.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: origin.len(),
            index: 0,
        });
    }
    let mut order: Vec<usize> = (0..k).collect();
    let uv = u.as_slice();
    order.sort_by(|&a, &b| {
        uv[a]
            .abs()
            .partial_cmp(&uv[b].abs())
            .unwrap()
            .then(a.cmp(&b))
    });
    let mut axes: Vec<Vec<S>> = vec![uv.to_vec()];
    for &j in order.iter().take(k - 1) {
        let mut v = vec![S::zero(); k];
        v[j] = S::one();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for a in &axes {
                let c = linalg::dot(&v, a);
                for (vi, &ai) in v.iter_mut().zip(a) {
                    *vi -= c * ai;
                }
            }
        }
        let nrm = linalg::norm(&v);
        axes.push(linalg::scale(&v, S::one() / nrm));
    }
    let axes = std::iter::once(Ok(u.clone()))
        .chain(axes.into_iter().skip(1).map(UnitDirection::from_unit))
        .collect::<Result<Vec<_>>>()?;
    OrthonormalBasis::new(axes, origin)
}

/// The shear `g_gamma`: in the frame of `basis` it sends `e_1 -> e_1 + gamma e_2`
/// and fixes every other axis, so the hyperplane through `origin` orthogonal to
/// `e_1` is fixed pointwise. In ambient coordinates
/// `x -> x + gamma * <e_1, x - origin> * e_2`.
pub fn shear_transform<S: Scalar>(gamma: S, basis: &OrthonormalBasis<S>) -> Result<AffineMap<S>> {
    let k = basis.dim();
    if k < 2 {
        return Err(Error::InvalidParameter(
            "shear transform needs k >= 2".into(),
        ));
    }
    let e1 = basis.axis(0);
    let e2 = basis.axis(1);
    let mut matrix: Vec<Vec<S>> = linalg::identity(k);
    for (i, row) in matrix.iter_mut().enumerate() {
        for (j, m) in row.iter_mut().enumerate() {
            *m += gamma * e2[i] * e1[j];
        }
    }
    let shift = gamma * linalg::dot(e1, basis.origin());
    let offset = e2.iter().map(|&v| -shift * v).collect();
    Ok(AffineMap { matrix, offset })
}

pub fn apply_map<S: Scalar>(g: &AffineMap<S>, x: &DataSet<S>) -> Result<DataSet<S>> {
    if g.dim() != x.k() {
        return Err(Error::DimensionMismatch {
            expected: x.k(),
            found: g.dim(),
            index: 0,
        });
    }
    DataSet::sample(x.points().iter().map(|p| g.apply(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn standard(k: usize) -> OrthonormalBasis<f64> {
        basis_from_normal(&UnitDirection::axis(k, 0), vec![0.0; k]).unwrap()
    }

    #[test]
    fn zero_shear_is_identity() {
        let g = shear_transform(0.0, &standard(3)).unwrap();
        assert_eq!(g.max_abs_diff(&AffineMap::identity(3)), 0.0);
    }

    #[test]
    fn shear_moves_first_axis_onto_second() {
        let g = shear_transform(2.0, &standard(2)).unwrap();
        assert_eq!(g.apply(&[1.0, 0.0]), vec![1.0, 2.0]);
        assert_eq!(g.apply(&[0.0, 5.0]), vec![0.0, 5.0]);
        assert!((g.determinant() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hyperplane_fixed_pointwise() {
        let u = UnitDirection::normalize(vec![1.0, 2.0, -0.5]).unwrap();
        let origin = vec![0.3, -1.0, 2.0];
        let basis = basis_from_normal(&u, origin).unwrap();
        let g = shear_transform(37.0, &basis).unwrap();
        // points with zero e_1-coordinate
        let p = basis.to_ambient(&[0.0, 1.5, -2.0]);
        let q = g.apply(&p);
        assert!(linalg::distance(&p, &q) < 1e-12);
    }

    #[test]
    fn shear_rejects_one_dimension() {
        assert!(shear_transform(1.0, &standard(1)).is_err());
    }

    #[test]
    fn basis_of_axis_direction() {
        let b = standard(2);
        assert_eq!(b.axis(0), &[1.0, 0.0]);
        assert!((b.axis(1)[1].abs() - 1.0).abs() < 1e-15);
        assert!(b.axis(1)[0].abs() < 1e-15);
    }

    #[test]
    fn basis_round_trip_in_four_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let v: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
            let u = UnitDirection::normalize(v).unwrap();
            let origin: Vec<f64> = (0..4).map(|_| rng.random_range(-5.0..5.0)).collect();
            let b = basis_from_normal(&u, origin).unwrap();
            assert!(b.gram_residual() <= 1e-10);
            assert_eq!(b.axis(0), u.as_slice());
            let x: Vec<f64> = (0..4).map(|_| rng.random_range(-10.0..10.0)).collect();
            let back = b.to_ambient(&b.to_local(&x));
            assert!(linalg::distance(&x, &back) < 1e-10);
        }
    }

    #[test]
    fn near_parallel_axis_is_skipped() {
        let u = UnitDirection::normalize(vec![1.0, 1e-14, 0.0]).unwrap();
        let b = basis_from_normal(&u, vec![0.0; 3]).unwrap();
        assert!(b.gram_residual() <= 1e-10);
    }
}
