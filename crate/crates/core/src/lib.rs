//! Robust multivariate location estimators, depth and outlyingness, the
//! facet-margin condition, and an adversarial engine that certifies how many
//! replaced observations break an estimator.
//!
//! Everything is generic over [`Scalar`] (`f64` or `f32`); the aliases at the
//! crate root fix the common case.

pub mod breakdown;
pub mod conditions;
pub mod depth;
pub mod error;
pub mod estimators;
pub mod geometry;
pub mod linalg;
pub mod metric;
mod scalar;

pub use error::{Error, Result};
pub use estimators::{EquivarianceClass, EstimateSet, LocationEstimator};
pub use geometry::{AffineMap, DataSet, OrthonormalBasis, UnitDirection};
pub use scalar::Scalar;

pub type DataSetF64 = DataSet<f64>;
pub type DataSetF32 = DataSet<f32>;
pub type EstimateSetF64 = EstimateSet<f64>;
pub type EstimateSetF32 = EstimateSet<f32>;
pub type AffineMapF64 = AffineMap<f64>;
pub type AffineMapF32 = AffineMap<f32>;
pub type UnitDirectionF64 = UnitDirection<f64>;
pub type UnitDirectionF32 = UnitDirection<f32>;
pub type AttackTraceF64 = breakdown::AttackTrace<f64>;
pub type AttackTraceF32 = breakdown::AttackTrace<f32>;
