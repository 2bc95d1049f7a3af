use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Set-valued sample median `[x_(n/2), x_(n/2+1)]`; degenerate for odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MedianInterval<S> {
    pub low: S,
    pub high: S,
}

impl<S: Scalar> MedianInterval<S> {
    /// Point representative used by downstream arithmetic.
    pub fn midpoint(&self) -> S {
        if self.low == self.high {
            self.low
        } else {
            (self.low + self.high) / S::lit(2.0)
        }
    }
}

pub(crate) fn sorted<S: Scalar>(values: &[S]) -> Vec<S> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    v
}

pub(crate) fn median_of_sorted<S: Scalar>(v: &[S]) -> MedianInterval<S> {
    let n = v.len();
    if n % 2 == 1 {
        MedianInterval {
            low: v[n / 2],
            high: v[n / 2],
        }
    } else {
        MedianInterval {
            low: v[n / 2 - 1],
            high: v[n / 2],
        }
    }
}

pub fn univariate_median<S: Scalar>(values: &[S]) -> Result<MedianInterval<S>> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter("non-finite value".into()));
    }
    Ok(median_of_sorted(&sorted(values)))
}

/// Order-statistic MAD about the median midpoint.
///
/// Returns the `ceil((n + j + 1) / 2)`-th smallest absolute deviation, clamped
/// to `n`. `order_shift = 0` is the ordinary (high) MAD; `order_shift = k - 1`
/// is the adjusted variant used by the projection median.
pub fn mad<S: Scalar>(values: &[S], order_shift: usize) -> Result<S> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if order_shift > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "order shift {order_shift} exceeds n - 1 = {}",
            n - 1
        )));
    }
    let center = univariate_median(values)?.midpoint();
    let dev: Vec<S> = values.iter().map(|&x| (x - center).abs()).collect();
    Ok(mad_index_value(&sorted(&dev), order_shift))
}

/// 1-based rank `ceil((n + j + 1) / 2)`, clamped to `n`.
pub(crate) fn mad_rank(n: usize, order_shift: usize) -> usize {
    (n + order_shift + 1).div_ceil(2).min(n)
}

#[inline]
pub(crate) fn mad_index_value<S: Scalar>(sorted_dev: &[S], order_shift: usize) -> S {
    let rank = mad_rank(sorted_dev.len(), order_shift);
    sorted_dev[rank - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_and_even_medians() {
        assert_eq!(
            univariate_median(&[1.0, 2.0, 3.0]).unwrap(),
            MedianInterval { low: 2.0, high: 2.0 }
        );
        let m = univariate_median(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!((m.low, m.high), (2.0, 3.0));
        assert_eq!(m.midpoint(), 2.5);
        assert_eq!(univariate_median(&[3.0, 1.0, 4.0, 1.0, 5.0]).unwrap().low, 3.0);
        assert!(matches!(univariate_median::<f64>(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn mad_examples() {
        assert_eq!(mad(&[1.0, 2.0, 3.0, 4.0, 100.0], 0).unwrap(), 1.0);
        assert_eq!(mad(&[7.0; 6], 0).unwrap(), 0.0);
        assert_eq!(mad(&[7.0; 6], 5).unwrap(), 0.0);
        assert_eq!(mad(&[-1.0, 0.0, 1.0], 0).unwrap(), 1.0);
    }

    #[test]
    fn mad_shift_moves_up_the_order_statistics() {
        // deviations about 3: {0, 1, 1, 2, 97}
        let x = [1.0, 2.0, 3.0, 4.0, 100.0];
        assert_eq!(mad(&x, 1).unwrap(), 2.0);
        assert_eq!(mad(&x, 2).unwrap(), 2.0);
        assert_eq!(mad(&x, 4).unwrap(), 97.0);
        assert!(mad(&x, 5).is_err());
    }

    #[test]
    fn rank_formula() {
        assert_eq!(mad_rank(5, 0), 3);
        assert_eq!(mad_rank(3, 0), 2);
        assert_eq!(mad_rank(22, 0), 12);
        assert_eq!(mad_rank(22, 1), 12);
        assert_eq!(mad_rank(4, 3), 4);
    }
}
