//! Point sets and the affine machinery used by the estimators and attacks.

mod facets;
mod general_position;
mod io;
mod shear;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

pub use facets::{enumerate_facets, hyperplane_normal, Facet};
pub use general_position::{
    check_general_position, check_general_position_with, GeneralPosition, GpTolerance,
};
pub use io::{read_csv, read_csv_from};
pub use shear::{apply_map, basis_from_normal, shear_transform};

/// An ordered list of `n` points in `R^k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DataSet<S> {
    points: Vec<Vec<S>>,
    dim: usize,
}

impl<S: Scalar> DataSet<S> {
    /// Builds a data set with `n > k >= 1` finite points.
    pub fn new(points: Vec<Vec<S>>) -> Result<Self> {
        let ds = Self::sample(points)?;
        if ds.n() <= ds.k() {
            return Err(Error::SampleSize {
                n: ds.n(),
                k: ds.k(),
            });
        }
        Ok(ds)
    }

    /// Builds a data set without the `n > k` requirement (`n >= 1`).
    pub fn sample(points: Vec<Vec<S>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyInput)?.len();
        if dim == 0 {
            return Err(Error::SampleSize {
                n: points.len(),
                k: 0,
            });
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                    index: i,
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite(i));
            }
        }
        Ok(Self { points, dim })
    }

    /// One-dimensional data set from scalar values.
    pub fn from_values(values: &[S]) -> Result<Self> {
        Self::sample(values.iter().map(|&v| vec![v]).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn points(&self) -> &[Vec<S>] {
        &self.points
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[S] {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Vec<S>> {
        self.points
    }

    /// Largest pairwise Euclidean distance.
    pub fn diameter(&self) -> S {
        let mut d = S::zero();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                d = d.max(linalg::distance(&self.points[i], &self.points[j]));
            }
        }
        d
    }

    pub fn coordinate(&self, j: usize) -> Vec<S> {
        self.points.iter().map(|p| p[j]).collect()
    }

    /// Inner products `u'x_i`.
    pub fn project(&self, u: &[S]) -> Vec<S> {
        self.points.iter().map(|p| linalg::dot(p, u)).collect()
    }

    pub fn centroid(&self) -> Vec<S> {
        let n = S::from_count(self.n());
        (0..self.dim)
            .map(|j| self.points.iter().map(|p| p[j]).sum::<S>() / n)
            .collect()
    }

    /// Copy with `indices[r]` replaced by `replacements[r]`.
    pub fn with_replaced(&self, indices: &[usize], replacements: &[Vec<S>]) -> Result<Self> {
        if indices.len() != replacements.len() {
            return Err(Error::InvalidParameter(
                "replacement count differs from index count".into(),
            ));
        }
        let mut points = self.points.clone();
        for (&i, p) in indices.iter().zip(replacements) {
            if i >= points.len() {
                return Err(Error::InvalidParameter(format!("index {i} out of range")));
            }
            points[i] = p.clone();
        }
        Self::sample(points)
    }

    pub fn subset(&self, indices: &[usize]) -> Vec<Vec<S>> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// A vector in `R^k` with unit Euclidean norm.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct UnitDirection<S>(Vec<S>);

impl<S: Scalar> UnitDirection<S> {
    /// Normalizes `v`; fails on the zero vector.
    pub fn normalize(v: Vec<S>) -> Result<Self> {
        let nrm = linalg::norm(&v);
        if !(nrm > S::zero()) || !nrm.is_finite() {
            return Err(Error::InvalidParameter("cannot normalize a zero vector".into()));
        }
        Ok(Self(linalg::scale(&v, S::one() / nrm)))
    }

    /// Wraps a vector that is already unit-norm.
    pub fn from_unit(v: Vec<S>) -> Result<Self> {
        if (linalg::norm(&v) - S::one()).abs() > S::unit_tolerance() {
            return Err(Error::InvalidParameter("direction is not unit-norm".into()));
        }
        Ok(Self(v))
    }

    /// Standard basis vector `e_j` of `R^k`.
    pub fn axis(k: usize, j: usize) -> Self {
        let mut v = vec![S::zero(); k];
        v[j] = S::one();
        Self(v)
    }

    #[inline]
    pub fn as_slice(&self) -> &[S] {
        &self.0
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|&x| -x).collect())
    }

    pub fn into_inner(self) -> Vec<S> {
        self.0
    }
}

/// Orthonormal frame `{e_1, ..., e_k}` anchored at `origin`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthonormalBasis<S> {
    axes: Vec<UnitDirection<S>>,
    origin: Vec<S>,
}

impl<S: Scalar> OrthonormalBasis<S> {
    pub fn new(axes: Vec<UnitDirection<S>>, origin: Vec<S>) -> Result<Self> {
        let k = origin.len();
        if axes.len() != k || axes.iter().any(|a| a.dim() != k) {
            return Err(Error::InvalidParameter(
                "basis must have k axes of dimension k".into(),
            ));
        }
        for i in 0..k {
            for j in i + 1..k {
                if linalg::dot(axes[i].as_slice(), axes[j].as_slice()).abs()
                    > S::orthogonality_tolerance()
                {
                    return Err(Error::InvalidParameter("basis is not orthogonal".into()));
                }
            }
        }
        Ok(Self { axes, origin })
    }

    pub fn axes(&self) -> &[UnitDirection<S>] {
        &self.axes
    }

    pub fn axis(&self, j: usize) -> &[S] {
        self.axes[j].as_slice()
    }

    pub fn origin(&self) -> &[S] {
        &self.origin
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    /// Coordinates of `x - origin` in the frame.
    pub fn to_local(&self, x: &[S]) -> Vec<S> {
        let d = linalg::sub(x, &self.origin);
        self.axes.iter().map(|a| linalg::dot(a.as_slice(), &d)).collect()
    }

    pub fn to_ambient(&self, c: &[S]) -> Vec<S> {
        let mut x = self.origin.clone();
        for (a, &cj) in self.axes.iter().zip(c) {
            for (xi, &ai) in x.iter_mut().zip(a.as_slice()) {
                *xi += cj * ai;
            }
        }
        x
    }

    /// Largest absolute deviation of the Gram matrix from the identity.
    pub fn gram_residual(&self) -> S {
        let k = self.dim();
        let mut r = S::zero();
        for i in 0..k {
            for j in 0..k {
                let g = linalg::dot(self.axis(i), self.axis(j));
                let e = if i == j { S::one() } else { S::zero() };
                r = r.max((g - e).abs());
            }
        }
        r
    }
}

/// `x -> matrix * x + offset` with a nonsingular matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineMap<S> {
    matrix: Vec<Vec<S>>,
    offset: Vec<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(matrix: Vec<Vec<S>>, offset: Vec<S>) -> Result<Self> {
        let k = offset.len();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter("affine map must be k x k".into()));
        }
        // row-max scaling makes the singularity test independent of row magnitudes
        let scaled: Vec<Vec<S>> = matrix
            .iter()
            .map(|row| {
                let m = row.iter().fold(S::zero(), |a, &x| a.max(x.abs()));
                if m > S::zero() {
                    linalg::scale(row, S::one() / m)
                } else {
                    row.clone()
                }
            })
            .collect();
        if !(linalg::det(scaled).abs() > S::lit(1e-12)) {
            return Err(Error::InvalidParameter("affine map is singular".into()));
        }
        Ok(Self { matrix, offset })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            matrix: linalg::identity(k),
            offset: vec![S::zero(); k],
        }
    }

    pub fn translation(b: Vec<S>) -> Self {
        Self {
            matrix: linalg::identity(b.len()),
            offset: b,
        }
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[S] {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    pub fn determinant(&self) -> S {
        linalg::det(self.matrix.clone())
    }

    pub fn apply(&self, x: &[S]) -> Vec<S> {
        linalg::add(&linalg::mat_vec(&self.matrix, x), &self.offset)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            offset: self.apply(&other.offset),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = linalg::inverse(&self.matrix)
            .ok_or_else(|| Error::InvalidParameter("affine map is singular".into()))?;
        let offset = linalg::scale(&linalg::mat_vec(&inv, &self.offset), -S::one());
        Ok(Self {
            matrix: inv,
            offset,
        })
    }

    /// Largest entrywise difference to another map.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        let mut d = S::zero();
        for (ra, rb) in self.matrix.iter().zip(&other.matrix) {
            for (&a, &b) in ra.iter().zip(rb) {
                d = d.max((a - b).abs());
            }
        }
        for (&a, &b) in self.offset.iter().zip(&other.offset) {
            d = d.max((a - b).abs());
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_small_sets() {
        assert!(matches!(
            DataSet::new(vec![vec![0.0, 1.0], vec![1.0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            DataSet::new(vec![vec![0.0, 1.0], vec![1.0, 2.0]]),
            Err(Error::SampleSize { n: 2, k: 2 })
        ));
        assert!(matches!(
            DataSet::<f64>::new(vec![]),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            DataSet::new(vec![vec![f64::NAN], vec![1.0]]),
            Err(Error::NonFinite(0))
        ));
    }

    #[test]
    fn diameter_of_unit_square() {
        let ds = DataSet::new(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        assert!((ds.diameter() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn singular_map_rejected() {
        assert!(AffineMap::new(vec![vec![1.0, 2.0], vec![2.0, 4.0]], vec![0.0, 0.0]).is_err());
        // tiny but well-conditioned rows survive row-max scaling
        assert!(AffineMap::new(vec![vec![1e-20, 0.0], vec![0.0, 1e-20]], vec![0.0, 0.0]).is_ok());
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let g = AffineMap::new(vec![vec![2.0, 1.0], vec![-1.0, 3.0]], vec![0.5, -4.0]).unwrap();
        let id = g.compose(&g.inverse().unwrap());
        assert!(id.max_abs_diff(&AffineMap::identity(2)) < 1e-10);
    }
}
