use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Unreduced `numerator / denominator`, e.g. `4/10` for `m = 4` of `n = 10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
}

impl Fraction {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "zero denominator");
        Self {
            numerator,
            denominator,
        }
    }

    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.ratio().cmp(&other.ratio()))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Finite-sample breakdown bounds for a sample of `n` points in `R^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub n: usize,
    pub k: usize,
    pub h: usize,
    /// `floor((n + 1) / 2) / n`: any translation equivariant location estimator.
    pub translation: Fraction,
    /// `floor((n - h + 1) / 2) / n`: affine equivariant estimators satisfying `(C_h)`.
    pub affine_condition_h: Fraction,
    /// `floor((n - k + 1) / 2) / n`: affine equivariant scatter estimators.
    pub scatter: Fraction,
    /// `floor((n - k + 2) / 2) / n`: projection median with the adjusted MAD.
    pub zuo_pm: Fraction,
}

pub fn theoretical_bounds(n: usize, k: usize, h: usize) -> Result<BoundTable> {
    if k == 0 || n <= k {
        return Err(Error::SampleSize { n, k });
    }
    if h == 0 || h > k {
        return Err(Error::InvalidParameter(format!("need 1 <= h <= k, got h = {h}")));
    }
    let frac = |num: usize| Fraction::new((num / 2) as u64, n as u64);
    Ok(BoundTable {
        n,
        k,
        h,
        translation: frac(n + 1),
        affine_condition_h: frac(n - h + 1),
        scatter: frac(n - k + 1),
        zuo_pm: frac(n - k + 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_ten_examples() {
        let t = theoretical_bounds(10, 2, 2).unwrap();
        assert_eq!(t.translation, Fraction::new(5, 10));
        assert_eq!(t.affine_condition_h, Fraction::new(4, 10));
        assert_eq!(t.scatter, Fraction::new(4, 10));
        assert_eq!(t.zuo_pm, Fraction::new(5, 10));
        assert_eq!(t.translation.to_string(), "5/10");
    }

    #[test]
    fn parameter_errors() {
        assert!(theoretical_bounds(2, 2, 1).is_err());
        assert!(theoretical_bounds(5, 2, 3).is_err());
        assert!(theoretical_bounds(5, 2, 0).is_err());
        assert!(theoretical_bounds(5, 0, 0).is_err());
    }

    #[test]
    fn fractions_compare_as_rationals() {
        assert!(Fraction::new(4, 10) < Fraction::new(1, 2));
        assert_eq!(
            Fraction::new(5, 10).partial_cmp(&Fraction::new(1, 2)),
            Some(Ordering::Equal)
        );
    }
}
